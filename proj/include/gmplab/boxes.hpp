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

#include <array>

#include "gmplab/eta.hpp"

namespace gmplab {

/// p(r, s | i, j) for binary inputs i, j and outputs r, s.
using BoxTable = std::array<double, 16>;

constexpr std::size_t box_index(int r, int s, int i, int j) {
  return static_cast<std::size_t>(((r * 2 + s) * 2 + i) * 2 + j);
}

inline constexpr double kNoSignallingTolerance = 1e-12;

/// A normalized, nonnegative, no-signalling box.
class NoSignallingBox {
 public:
  explicit NoSignallingBox(const BoxTable& table);

  double operator()(int r, int s, int i, int j) const { return table_[box_index(r, s, i, j)]; }
  const BoxTable& table() const noexcept { return table_; }

 private:
  BoxTable table_;
};

/// 1/2 when r xor s = i j, else 0.
NoSignallingBox pr_box();
/// lambda * PR + (1 - lambda) / 4.
NoSignallingBox isotropic_box(double lambda);

/// E_ij = sum_rs (-1)^{r xor s} p(r, s | i, j).
double correlator(const NoSignallingBox& box, int i, int j);
/// S = E00 + E01 + E10 - E11.
double chsh_value(const NoSignallingBox& box);

/// p(s | j) on Bob's side after Alice inputs i and sees r; indexed [j][s].
using ConditionalTable = std::array<std::array<double, 2>, 2>;
ConditionalTable conditional_outcome_probs(const NoSignallingBox& box, int i, int r);

/// 1 - 2 eta^{-1}(1/4).
double lambda_bound(const EtaFunction& eta);

struct SignallingReport {
  bool is_ns = false;
  double max_violation = 0.0;
};

/// Largest change of either party's marginal under a change of the remote input.
/// The table must be normalized for every input pair.
SignallingReport signalling_witness(const BoxTable& table);

}  // namespace gmplab
