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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "output.hpp"

namespace gmplab::cli {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  Json metrics = Json::object();  // deterministic given the seed
  double seconds = 0.0;
};

/// Criterion ids the suite must cover, each exactly once.
const std::vector<int>& acceptance_ids();

/// Runs criteria 1..13 once.
std::vector<CriterionResult> run_primary_criteria(std::uint64_t seed, std::size_t threads);

/// Runs the full suite including the reproducibility rerun (criterion 14).
/// Throws std::logic_error if the id coverage self-audit fails.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, std::size_t threads);

/// Deterministic document of the primary outputs (ids, verdicts, metrics).
Json acceptance_primary_json(const std::vector<CriterionResult>& results, std::uint64_t seed);

/// id,name,passed,detail rows.
std::string acceptance_csv(const std::vector<CriterionResult>& results);

}  // namespace gmplab::cli
