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
#include <vector>

#include "output.hpp"

namespace gmplab::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Lowercase hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);
std::string sha256_hex(const std::string& bytes);

struct RunManifest {
  std::vector<std::string> command_line;
  std::uint64_t seed = 0;
  std::string version = kToolVersion;
  std::string timestamp;  // UTC, ISO 8601
  Json parameters = Json::object();
  Json timing = Json::object();
  std::vector<std::filesystem::path> outputs;

  Json to_json() const;
};

/// UTC wall-clock time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

/// Writes `<primary>.manifest.json` next to the primary output and returns its path.
std::filesystem::path write_manifest(const RunManifest& manifest,
                                     const std::filesystem::path& primary);

struct ManifestCheck {
  bool ok = false;
  std::vector<std::string> problems;
};

/// Every listed output must exist and match its recorded digest.
ManifestCheck verify_manifest(const std::filesystem::path& manifest_path);

}  // namespace gmplab::cli
