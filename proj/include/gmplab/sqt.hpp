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
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "gmplab/linalg.hpp"

namespace gmplab::sqt {

/// Lower eigenvalue scale of the stretched state set: rho >= -tau * theta * I.
inline constexpr double kTheta = (std::numbers::sqrt2 - 1.0) / 2.0;

/// Default slack for state-set membership tests.
inline constexpr double kMembershipTolerance = 1e-10;
/// Slack on the minimum probability an effect may assign to a state.
inline constexpr double kEffectTolerance = 1e-8;

class SqtParams {
 public:
  /// Throws ValidationError unless 0 <= tau <= 1.
  explicit SqtParams(double tau);
  double tau() const noexcept { return tau_; }
  static constexpr double theta() noexcept { return kTheta; }
  /// Largest eigenvalue deficit a state may carry: tau * theta.
  double eigenvalue_floor() const noexcept { return -tau_ * kTheta; }
  /// Bloch radius of the qubit state body: 1 + tau (sqrt2 - 1).
  double bloch_radius() const noexcept { return 1.0 + tau_ * (std::numbers::sqrt2 - 1.0); }

 private:
  double tau_;
};

double q_of_tau(double tau);
double epsilon_of_tau(double tau);

/// f_j = d^{-1/2} sum_k exp(+2 pi i j k / d) |c_k>.
std::vector<std::vector<Complex>> fourier_basis(std::size_t d);

struct MembershipReport {
  bool member = false;
  double trace_error = 0.0;
  double comp_diag = 0.0;     // min <c_i|rho|c_i>
  double fourier_diag = 0.0;  // min <f_i|rho|f_i>
  double spectral = 0.0;      // min eigenvalue + tau * theta
};

/// Membership in the stretched state set. Accepts single systems of any
/// dimension and two-qubit product operators; any other multipartite layout
/// raises UnsupportedShapeError.
MembershipReport state_membership(const HermitianOperator& op, const SqtParams& params,
                                  double tolerance = kMembershipTolerance);

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  /// (I + x sx + y sy + z sz) / 2.
  HermitianOperator to_operator() const;
  /// Pauli coefficients Tr[rho sigma_i] of a unit-trace qubit operator.
  static BlochVector from_operator(const HermitianOperator& op);
};

/// Closed-form qubit state body: |z| <= 1, |x| <= 1, |r| <= 1 + tau (sqrt2 - 1).
bool qubit_state_body_membership(const BlochVector& b, const SqtParams& params);

struct BodyMinimum {
  double value = 0.0;
  BlochVector argmin;
};

/// Minimum of c . r over the qubit state body. The body is a ball cut by the
/// slabs |x| <= 1 and |z| <= 1, so the minimizer sits on one of a handful of
/// active-constraint sets; every set is solved in closed form and the best
/// feasible candidate wins.
BodyMinimum minimize_linear_over_body(const std::array<double, 3>& c, const SqtParams& params);

struct EffectReport {
  bool member = false;
  double min_eigenvalue = 0.0;
  double min_probability = 0.0;  // min over the state body of Tr[m rho]
  BlochVector worst_state;
};

/// Membership of a 2x2 operator in the PSD part of the dual cone of the qubit state body.
EffectReport qubit_effect_report(const HermitianOperator& m, const SqtParams& params);
bool qubit_effect_membership(const HermitianOperator& m, const SqtParams& params);

/// A unit-trace operator inside the stretched state set.
class SqtState {
 public:
  SqtState(HermitianOperator op, SqtParams params);
  const HermitianOperator& op() const& noexcept { return op_; }
  HermitianOperator op() && { return std::move(op_); }
  const SqtParams& params() const noexcept { return params_; }

 private:
  HermitianOperator op_;
  SqtParams params_;
};

/// (q(tau)/sqrt2) [(-1)^k sz + (-1)^l sx] + I/2.
SqtState rho_kl(int k, int l, const SqtParams& params);

}  // namespace gmplab::sqt
