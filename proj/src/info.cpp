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

#include "gmplab/info.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>

#include "gmplab/error.hpp"
#include "gmplab/sqt.hpp"

namespace gmplab {

namespace {

constexpr double kLn2 = std::numbers::ln2;

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

// Fibonacci lattice on the unit sphere.
std::vector<sqt::BlochVector> fibonacci_sphere(int count) {
  std::vector<sqt::BlochVector> points;
  points.reserve(static_cast<std::size_t>(count));
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < count; ++k) {
    const double z = 1.0 - 2.0 * (k + 0.5) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * k;
    points.push_back({r * std::cos(phi), r * std::sin(phi), z});
  }
  return points;
}

}  // namespace

// ------------------------------------------------------- JointDistribution

JointDistribution::JointDistribution(std::size_t rows, std::size_t cols, std::vector<double> table)
    : rows_(rows), cols_(cols), table_(std::move(table)) {
  if (rows_ == 0 || cols_ == 0 || table_.size() != rows_ * cols_) {
    throw ValidationError("JointDistribution: table shape mismatch");
  }
  double total = 0.0;
  for (double v : table_) {
    if (v < 0.0) throw ValidationError("JointDistribution: negative entry");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-12) throw ValidationError("JointDistribution: does not sum to 1");
}

std::vector<double> JointDistribution::row_marginal() const {
  std::vector<double> m(rows_, 0.0);
  for (std::size_t a = 0; a < rows_; ++a) {
    for (std::size_t b = 0; b < cols_; ++b) m[a] += (*this)(a, b);
  }
  return m;
}

std::vector<double> JointDistribution::col_marginal() const {
  std::vector<double> m(cols_, 0.0);
  for (std::size_t a = 0; a < rows_; ++a) {
    for (std::size_t b = 0; b < cols_; ++b) m[b] += (*this)(a, b);
  }
  return m;
}

// --------------------------------------------------------------- entropies

double shannon_entropy(std::span<const double> p) {
  double h = 0.0;
  for (double v : p) h += plogp(v);
  return h;
}

double binary_entropy(double x) {
  if (x < 0.0 || x > 1.0) throw ValidationError("binary_entropy: argument outside [0, 1]");
  return plogp(x) + plogp(1.0 - x);
}

double mutual_information(const JointDistribution& joint) {
  const auto a = joint.row_marginal();
  const auto b = joint.col_marginal();
  return shannon_entropy(a) + shannon_entropy(b) - shannon_entropy(joint.table());
}

double binary_capacity(double y) {
  y = std::abs(y);
  if (y > 1.0) throw ValidationError("binary_capacity: |y| must not exceed 1");
  if (y == 1.0) return 1.0;
  if (y < 1e-3) {
    // sum_k y^{2k} / (2k (2k - 1)) / ln 2
    const double y2 = y * y;
    double term = y2;
    double sum = 0.0;
    for (int k = 1; k <= 6; ++k) {
      sum += term / (2.0 * k * (2.0 * k - 1.0));
      term *= y2;
    }
    return sum / kLn2;
  }
  return ((1.0 + y) * std::log1p(y) + (1.0 - y) * std::log1p(-y)) / (2.0 * kLn2);
}

// ------------------------------------------------------------ Fano & tau

double fano_lower_bound(double tau, const EtaFunction& eta) {
  const double e = eta(sqt::epsilon_of_tau(tau));
  if (2.0 * e > 0.5) return -std::numeric_limits<double>::infinity();
  return 2.0 - binary_entropy(2.0 * e) - 4.0 * e;
}

TauBound tau_bound_solver(const EtaFunction& eta) {
  TauBound result;
  result.closed_form_argument = (1.0 - 2.0 * kLn2) / 4.0;
  auto excess = [&](double tau) { return fano_lower_bound(tau, eta) - 1.0; };

  if (excess(0.0) > 0.0) {
    // Even the quantum end of the family is excluded.
    result.tau_star = 0.0;
    result.bracket_lo = result.bracket_hi = 0.0;
    result.fano_at_tau_star = fano_lower_bound(0.0, eta);
    return result;
  }
  constexpr double kTopProbe = 1.0 - 1e-10;
  if (excess(kTopProbe) <= 0.0) {
    result.tau_star = 1.0;
    result.bracket_lo = kTopProbe;
    result.bracket_hi = 1.0;
    result.fano_at_tau_star = fano_lower_bound(1.0, eta);
    result.trivial = true;
    return result;
  }
  double lo = 0.0;  // excess <= 0
  double hi = 1.0;  // excess > 0
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (excess(mid) <= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  result.tau_star = lo;
  result.bracket_lo = lo;
  result.bracket_hi = hi;
  result.fano_at_tau_star = fano_lower_bound(lo, eta);
  return result;
}

double jn_lower_bound(double tau, int n) {
  return std::pow(1.0 + (std::numbers::sqrt2 - 1.0) * tau, 2.0 * n) / (2.0 * kLn2);
}

double pinsker_like_gap(double y) {
  if (y < 0.0 || y > 1.0) throw ValidationError("pinsker_like_gap: y must lie in [0, 1]");
  return binary_capacity(y) - y * y / (2.0 * kLn2);
}

Lemma35Report lemma35_check(const std::function<double(double)>& f, std::span<const double> dist,
                            std::span<const double> eps_list, double eps, double c) {
  if (dist.size() != eps_list.size() || dist.empty()) {
    throw ValidationError("lemma35_check: distribution and eps list differ in length");
  }
  if (!(c > 0.0) || !(eps > 0.0) || eps > c * c) {
    throw ValidationError("lemma35_check: need c > 0 and eps in (0, c^2]");
  }
  double total = 0.0;
  double mean = 0.0;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    if (dist[k] < 0.0) throw ValidationError("lemma35_check: negative probability");
    if (eps_list[k] < 0.0 || eps_list[k] > c) {
      throw ValidationError("lemma35_check: eps_k outside [0, c]");
    }
    total += dist[k];
    mean += dist[k] * eps_list[k];
  }
  if (std::abs(total - 1.0) > 1e-12) throw ValidationError("lemma35_check: p does not sum to 1");
  if (mean > eps * (1.0 + 1e-12)) throw ValidationError("lemma35_check: sum p_k eps_k exceeds eps");

  Lemma35Report report;
  for (std::size_t k = 0; k < dist.size(); ++k) report.lhs += dist[k] * f(eps_list[k]);
  const double root = std::sqrt(eps);
  report.rhs = f(root) + f(c) * root;
  report.holds = report.lhs <= report.rhs + 1e-12;
  return report;
}

// ------------------------------------------------- accessible information

double accessible_info_lower_bound(const CqEnsemble& ensemble, int resolution) {
  if (resolution < 16) throw ValidationError("accessible_info_lower_bound: resolution below 16");
  // Group members by label: p(label) and the label's average Bloch vector.
  std::map<std::string, std::pair<double, sqt::BlochVector>> groups;
  std::vector<sqt::BlochVector> member_bloch;
  for (const auto& item : ensemble.items()) {
    if (item.state.dim() != 2) throw ValidationError("accessible_info_lower_bound: qubit states only");
    const auto b = sqt::BlochVector::from_operator(item.state);
    member_bloch.push_back(b);
    auto& g = groups[item.label];
    g.first += item.probability;
    g.second.x += item.probability * b.x;
    g.second.y += item.probability * b.y;
    g.second.z += item.probability * b.z;
  }

  std::vector<sqt::BlochVector> directions = fibonacci_sphere(resolution);
  directions.push_back({0.0, 0.0, 1.0});
  directions.push_back({1.0, 0.0, 0.0});

  double best = 0.0;
  for (const auto& n : directions) {
    bool admissible = true;
    for (const auto& b : member_bloch) {
      const double dot = n.x * b.x + n.y * b.y + n.z * b.z;
      if (std::abs(dot) > 1.0 + 1e-12) admissible = false;
    }
    if (!admissible) continue;
    std::vector<double> table;
    table.reserve(groups.size() * 2);
    for (const auto& [label, g] : groups) {
      const double dot = n.x * g.second.x + n.y * g.second.y + n.z * g.second.z;
      // p(label, +) = (p + n . r_sum)/2 with r_sum the probability-weighted Bloch sum.
      table.push_back(std::clamp(0.5 * (g.first + dot), 0.0, g.first));
      table.push_back(g.first - table.back());
    }
    double total = 0.0;
    for (double v : table) total += v;
    for (double& v : table) v /= total;
    const JointDistribution joint(groups.size(), 2, std::move(table));
    best = std::max(best, mutual_information(joint));
  }
  return best;
}

// --------------------------------------------------------- C-G lemmas

HermitianOperator cq_state(std::span<const double> p, std::span<const HermitianOperator> states) {
  if (p.size() != states.size() || p.empty()) {
    throw ValidationError("cq_state: probability and state lists differ in length");
  }
  const std::size_t nx = p.size();
  const std::size_t d = states.front().dim();
  ComplexMatrix out(nx * d);
  for (std::size_t x = 0; x < nx; ++x) {
    if (states[x].dim() != d) throw ValidationError("cq_state: states differ in dimension");
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) out(x * d + i, x * d + j) = p[x] * states[x](i, j);
    }
  }
  return HermitianOperator(std::move(out), {nx, d});
}

KolmogorovDecompositionReport kolmogorov_cq_decomposition_check(
    std::span<const double> p, std::span<const HermitianOperator> phis,
    std::span<const HermitianOperator> psis) {
  if (phis.size() != psis.size()) throw ValidationError("kolmogorov check: list length mismatch");
  KolmogorovDecompositionReport report;
  report.direct = trace_distance(cq_state(p, phis), cq_state(p, psis));
  for (std::size_t x = 0; x < p.size(); ++x) {
    report.weighted_sum += p[x] * trace_distance(phis[x], psis[x]);
  }
  report.error = std::abs(report.direct - report.weighted_sum);
  report.holds = report.error <= 1e-10;
  return report;
}

CgMeasurementReport cg_measurement_decomposition_check(const HermitianOperator& cq,
                                                       const Povm& joint) {
  const auto& dims = cq.subsystem_dims();
  if (dims.size() != 2) throw ValidationError("cg check: state must have layout {|X|, d}");
  const std::size_t nx = dims[0];
  const std::size_t d = dims[1];
  if (joint.dim() != cq.dim()) throw ValidationError("cg check: POVM dimension mismatch");

  auto block = [d](const ComplexMatrix& m, std::size_t x, std::size_t y) {
    ComplexMatrix b(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) b(i, j) = m(x * d + i, y * d + j);
    }
    return b;
  };
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < nx; ++y) {
      if (x != y && block(cq.matrix(), x, y).max_abs() > 1e-12) {
        throw ValidationError("cg check: classical register is not diagonal");
      }
    }
  }

  std::vector<double> px(nx);
  std::vector<HermitianOperator> phis;
  for (std::size_t x = 0; x < nx; ++x) {
    HermitianOperator b(block(cq.matrix(), x, x));
    px[x] = b.trace();
    phis.push_back(px[x] > 0.0 ? b * (1.0 / px[x]) : HermitianOperator::identity(d) * (1.0 / d));
  }

  CgMeasurementReport report;
  for (const auto& effect : joint.effects()) {
    report.direct.push_back(effect.op.expectation(cq));
    double sum = 0.0;
    for (std::size_t x = 0; x < nx; ++x) {
      const HermitianOperator local(block(effect.op.matrix(), x, x));
      sum += px[x] * local.expectation(phis[x]);
    }
    report.decomposed.push_back(sum);
    report.max_error = std::max(report.max_error, std::abs(sum - report.direct.back()));
  }
  report.holds = report.max_error <= 1e-12;
  return report;
}

}  // namespace gmplab
