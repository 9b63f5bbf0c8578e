// Copyright 2026 The gmplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace gmplab::cli {

using Json = nlohmann::ordered_json;

/// Reals are printed with 12 significant digits.
std::string format_real(double value);

/// Rounds a double to 12 significant digits so that JSON dumps match
/// format_real. Non-finite values become null.
Json real(double value);

/// Recursively applies real() to every floating-point leaf.
Json round_reals(const Json& doc);

using Cell = std::variant<std::int64_t, double, std::string>;
using Row = std::vector<Cell>;

/// Header line plus one line per row, LF endings.
std::string render_csv(const std::vector<std::string>& header, const std::vector<Row>& rows);
/// Pretty-printed (2-space) JSON with a trailing newline, reals rounded.
std::string render_json(const Json& doc);

/// Writes bytes to path; throws IoError on failure.
void write_file(const std::filesystem::path& path, const std::string& contents);
std::string read_file(const std::filesystem::path& path);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gmplab::cli
