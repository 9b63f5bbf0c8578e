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

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gmplab/eta.hpp"
#include "gmplab/linalg.hpp"
#include "output.hpp"

namespace gmplab::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 2,
  kExitNumeric = 3,
  kExitUsage = 64,
};

/// Parses argv (argv[0] is the program name), runs the subcommand and returns
/// the exit code. Primary output goes to `out` when no output path is given;
/// diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// {"dim": n, "subsystem_dims": [...], "entries": [[re, im], ...]} row-major.
HermitianOperator matrix_from_json(const Json& doc);
Json matrix_to_json(const HermitianOperator& op);

/// "A..B" or a single integer.
std::pair<int, int> parse_range(const std::string& text);

/// "quantum" or "file:PATH".
EtaFunction parse_eta(const std::string& spec);

/// Inserts `--key value` pairs from a JSON object for every key not already
/// given on the command line.
std::vector<std::string> apply_params(const std::vector<std::string>& args, const Json& params);

}  // namespace gmplab::cli
