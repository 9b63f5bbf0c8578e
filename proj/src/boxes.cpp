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

#include "gmplab/boxes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gmplab/error.hpp"

namespace gmplab {

namespace {

void require_normalized(const BoxTable& t) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      double sum = 0.0;
      for (int r = 0; r < 2; ++r) {
        for (int s = 0; s < 2; ++s) sum += t[box_index(r, s, i, j)];
      }
      if (std::abs(sum - 1.0) > kNoSignallingTolerance) {
        throw ValidationError("box: p(.,.|" + std::to_string(i) + "," + std::to_string(j) +
                              ") does not sum to 1");
      }
    }
  }
}

}  // namespace

NoSignallingBox::NoSignallingBox(const BoxTable& table) : table_(table) {
  if (std::any_of(table_.begin(), table_.end(),
                  [](double p) { return p < -kNoSignallingTolerance; })) {
    throw ValidationError("box: negative entry");
  }
  require_normalized(table_);
  const SignallingReport ns = signalling_witness(table_);
  if (!ns.is_ns) {
    throw ValidationError("box: signalling by " + std::to_string(ns.max_violation));
  }
}

NoSignallingBox pr_box() { return isotropic_box(1.0); }

NoSignallingBox isotropic_box(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ValidationError("isotropic_box: lambda must lie in [0, 1]");
  }
  BoxTable t{};
  for (int r = 0; r < 2; ++r) {
    for (int s = 0; s < 2; ++s) {
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          const double pr = ((r ^ s) == (i & j)) ? 0.5 : 0.0;
          t[box_index(r, s, i, j)] = lambda * pr + (1.0 - lambda) / 4.0;
        }
      }
    }
  }
  return NoSignallingBox(t);
}

double correlator(const NoSignallingBox& box, int i, int j) {
  double e = 0.0;
  for (int r = 0; r < 2; ++r) {
    for (int s = 0; s < 2; ++s) e += ((r ^ s) == 0 ? 1.0 : -1.0) * box(r, s, i, j);
  }
  return e;
}

double chsh_value(const NoSignallingBox& box) {
  return correlator(box, 0, 0) + correlator(box, 0, 1) + correlator(box, 1, 0) -
         correlator(box, 1, 1);
}

ConditionalTable conditional_outcome_probs(const NoSignallingBox& box, int i, int r) {
  if ((i != 0 && i != 1) || (r != 0 && r != 1)) {
    throw ValidationError("conditional_outcome_probs: i and r must be bits");
  }
  ConditionalTable out{};
  for (int j = 0; j < 2; ++j) {
    const double marginal = box(r, 0, i, j) + box(r, 1, i, j);
    if (marginal <= 0.0) {
      throw ConditioningError("conditional_outcome_probs: p(r|i) is zero");
    }
    for (int s = 0; s < 2; ++s) out[j][s] = box(r, s, i, j) / marginal;
  }
  return out;
}

double lambda_bound(const EtaFunction& eta) { return 1.0 - 2.0 * eta_inverse(eta, 0.25); }

SignallingReport signalling_witness(const BoxTable& table) {
  require_normalized(table);
  double worst = 0.0;
  for (int own = 0; own < 2; ++own) {
    for (int out = 0; out < 2; ++out) {
      // Alice's marginal p(r = out | i = own, j) across Bob's input j.
      double alice[2];
      double bob[2];
      for (int remote = 0; remote < 2; ++remote) {
        alice[remote] = table[box_index(out, 0, own, remote)] + table[box_index(out, 1, own, remote)];
        bob[remote] = table[box_index(0, out, remote, own)] + table[box_index(1, out, remote, own)];
      }
      worst = std::max({worst, std::abs(alice[0] - alice[1]), std::abs(bob[0] - bob[1])});
    }
  }
  return {worst <= kNoSignallingTolerance, worst};
}

}  // namespace gmplab
