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
#include <functional>
#include <span>
#include <vector>

#include "gmplab/eta.hpp"
#include "gmplab/gentle.hpp"
#include "gmplab/linalg.hpp"

namespace gmplab {

/// Joint distribution p(a, b) over a finite rectangular label set.
class JointDistribution {
 public:
  JointDistribution(std::size_t rows, std::size_t cols, std::vector<double> table);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t a, std::size_t b) const { return table_[a * cols_ + b]; }
  std::vector<double> row_marginal() const;
  std::vector<double> col_marginal() const;
  std::span<const double> table() const noexcept { return table_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> table_;
};

/// Entropies are in bits; 0 log 0 = 0.
double shannon_entropy(std::span<const double> p);
double binary_entropy(double x);
double mutual_information(const JointDistribution& joint);

/// 1 - h((1 + y)/2), evaluated without cancellation for small y.
double binary_capacity(double y);

/// 2 - h(2 eta) - 4 eta at eta = eta(epsilon(tau)). Fano only bounds the
/// mutual information while 2 eta <= 1/2; beyond that the bound is vacuous
/// and -infinity is returned.
double fano_lower_bound(double tau, const EtaFunction& eta);

struct TauBound {
  double tau_star = 1.0;
  double fano_at_tau_star = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 1.0;
  bool trivial = false;
  /// Argument (1 - 2 ln 2)/4 appearing in the printed closed form; negative.
  double closed_form_argument = 0.0;
};

/// Largest tau with fano_lower_bound(tau) <= 1, by bisection to width 1e-10.
TauBound tau_bound_solver(const EtaFunction& eta);

/// [1 + (sqrt2 - 1) tau]^{2n} / (2 ln 2).
double jn_lower_bound(double tau, int n);

/// 1 - h((1+y)/2) - y^2/(2 ln 2); nonnegative on [0, 1].
double pinsker_like_gap(double y);

struct Lemma35Report {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// sum_k p_k f(eps_k) <= f(sqrt(eps)) + f(c) sqrt(eps) for nondecreasing f on
/// [0, c], eps_k in [0, c], sum_k p_k eps_k <= eps and eps in (0, c^2].
Lemma35Report lemma35_check(const std::function<double(double)>& f, std::span<const double> dist,
                            std::span<const double> eps_list, double eps, double c);

/// Lower bound on the accessible information of a qubit ensemble: best
/// classical mutual information between label and outcome over `resolution`
/// Fibonacci-sphere directions plus the z and x bases. Directions that would
/// assign a negative probability to some member are skipped.
double accessible_info_lower_bound(const CqEnsemble& ensemble, int resolution);

/// Block-diagonal sum_x p_x |x><x| (x) state_x with subsystem dims {|X|, d}.
HermitianOperator cq_state(std::span<const double> p, std::span<const HermitianOperator> states);

struct KolmogorovDecompositionReport {
  double direct = 0.0;        // trace distance of the two cq operators
  double weighted_sum = 0.0;  // sum_x p_x d(phi_x, psi_x)
  double error = 0.0;
  bool holds = false;
};

KolmogorovDecompositionReport kolmogorov_cq_decomposition_check(
    std::span<const double> p, std::span<const HermitianOperator> phis,
    std::span<const HermitianOperator> psis);

struct CgMeasurementReport {
  std::vector<double> direct;      // p(s | rho, nu)
  std::vector<double> decomposed;  // sum_x p(x) p(s | phi_x, nu_x)
  double max_error = 0.0;
  bool holds = false;
};

/// Splits a joint POVM on X (x) A into per-x effects <x|N_s|x> and compares
/// outcome statistics. `cq` must have subsystem dims {|X|, d} and be block
/// diagonal in the classical index.
CgMeasurementReport cg_measurement_decomposition_check(const HermitianOperator& cq,
                                                       const Povm& joint);

}  // namespace gmplab
