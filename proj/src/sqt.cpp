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

#include "gmplab/sqt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gmplab/error.hpp"

namespace gmplab::sqt {

namespace {

constexpr double kBodySlack = 1e-12;

double min_diag_in_basis(const HermitianOperator& op,
                         const std::vector<std::vector<Complex>>& basis) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& ket : basis) m = std::min(m, op.expectation(ket));
  return m;
}

MembershipReport single_system_membership(const HermitianOperator& op, const SqtParams& params,
                                          double tolerance) {
  const std::size_t d = op.dim();
  MembershipReport report;
  report.trace_error = std::abs(op.trace() - 1.0);
  report.comp_diag = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d; ++i) report.comp_diag = std::min(report.comp_diag, op(i));
  report.fourier_diag = min_diag_in_basis(op, fourier_basis(d));
  report.spectral = min_eigenvalue(op) + params.tau() * kTheta;
  report.member = report.trace_error <= tolerance && report.comp_diag >= -tolerance &&
                  report.fourier_diag >= -tolerance && report.spectral >= -tolerance;
  return report;
}

bool feasible(const BlochVector& r, double radius) {
  return std::abs(r.x) <= 1.0 + kBodySlack && std::abs(r.z) <= 1.0 + kBodySlack &&
         r.norm() <= radius + kBodySlack;
}

}  // namespace

SqtParams::SqtParams(double tau) : tau_(tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw ValidationError("SqtParams: tau must lie in [0, 1], got " + std::to_string(tau));
  }
}

double q_of_tau(double tau) { return (1.0 - tau) / 2.0 + tau / std::numbers::sqrt2; }

double epsilon_of_tau(double tau) { return (2.0 - std::numbers::sqrt2) * (1.0 - tau) / 4.0; }

std::vector<std::vector<Complex>> fourier_basis(std::size_t d) {
  if (d == 0) throw ValidationError("fourier_basis: dimension must be positive");
  std::vector<std::vector<Complex>> basis(d, std::vector<Complex>(d));
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      // Reduce jk mod d first so the phase stays exact for small d.
      const double angle =
          2.0 * std::numbers::pi * static_cast<double>((j * k) % d) / static_cast<double>(d);
      basis[j][k] = std::polar(norm, angle);
    }
  }
  return basis;
}

MembershipReport state_membership(const HermitianOperator& op, const SqtParams& params,
                                  double tolerance) {
  const auto& dims = op.subsystem_dims();
  if (dims.size() == 1) return single_system_membership(op, params, tolerance);
  if (dims.size() != 2 || dims[0] != 2 || dims[1] != 2) {
    throw UnsupportedShapeError(
        "state_membership: only single systems and two-qubit products are supported");
  }
  const HermitianOperator a = partial_trace(op, {0});
  const HermitianOperator b = partial_trace(op, {1});
  // Product states a (x) b only: separability of general mixtures is not decided here.
  const double trace = op.trace();
  if (std::abs(trace) < tolerance ||
      max_abs_diff(tensor(a, b).matrix() * Complex(1.0 / trace), op.matrix()) > tolerance) {
    throw UnsupportedShapeError("state_membership: two-qubit operator is not a product");
  }
  const MembershipReport ra = single_system_membership(a * (1.0 / a.trace()), params, tolerance);
  const MembershipReport rb = single_system_membership(b * (1.0 / b.trace()), params, tolerance);
  MembershipReport report;
  report.trace_error = std::abs(trace - 1.0);
  report.comp_diag = std::min(ra.comp_diag, rb.comp_diag);
  report.fourier_diag = std::min(ra.fourier_diag, rb.fourier_diag);
  report.spectral = std::min(ra.spectral, rb.spectral);
  report.member = report.trace_error <= tolerance && ra.member && rb.member;
  return report;
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

HermitianOperator BlochVector::to_operator() const {
  return (HermitianOperator::identity(2) + pauli::x() * x + pauli::y() * y + pauli::z() * z) *
         0.5;
}

BlochVector BlochVector::from_operator(const HermitianOperator& op) {
  if (op.dim() != 2) throw ValidationError("BlochVector: operator must be 2x2");
  return {op.expectation(pauli::x()), op.expectation(pauli::y()), op.expectation(pauli::z())};
}

bool qubit_state_body_membership(const BlochVector& b, const SqtParams& params) {
  return std::abs(b.z) <= 1.0 + kBodySlack && std::abs(b.x) <= 1.0 + kBodySlack &&
         b.norm() <= params.bloch_radius() + kBodySlack;
}

BodyMinimum minimize_linear_over_body(const std::array<double, 3>& c, const SqtParams& params) {
  const double radius = params.bloch_radius();
  const double face_radius = std::sqrt(std::max(radius * radius - 1.0, 0.0));
  const auto [cx, cy, cz] = c;

  std::vector<BlochVector> candidates;
  // Ball only.
  const double cn = std::sqrt(cx * cx + cy * cy + cz * cz);
  if (cn > 0.0) {
    candidates.push_back({-radius * cx / cn, -radius * cy / cn, -radius * cz / cn});
  } else {
    candidates.push_back({0.0, 0.0, 0.0});
  }
  // Ball with one slab face x = s or z = s.
  for (double s : {-1.0, 1.0}) {
    const double nyz = std::hypot(cy, cz);
    if (nyz > 0.0) {
      candidates.push_back({s, -face_radius * cy / nyz, -face_radius * cz / nyz});
    } else {
      candidates.push_back({s, 0.0, 0.0});
    }
    const double nxy = std::hypot(cx, cy);
    if (nxy > 0.0) {
      candidates.push_back({-face_radius * cx / nxy, -face_radius * cy / nxy, s});
    } else {
      candidates.push_back({0.0, 0.0, s});
    }
  }
  // Edges x = s, z = t; they meet the ball only when radius^2 >= 2.
  const double edge_half_length = std::sqrt(std::max(radius * radius - 2.0, 0.0));
  const double y_edge = cy > 0.0 ? -edge_half_length : (cy < 0.0 ? edge_half_length : 0.0);
  for (double s : {-1.0, 1.0}) {
    for (double t : {-1.0, 1.0}) candidates.push_back({s, y_edge, t});
  }

  BodyMinimum best{std::numeric_limits<double>::infinity(), {}};
  for (const auto& r : candidates) {
    if (!feasible(r, radius)) continue;
    const double value = cx * r.x + cy * r.y + cz * r.z;
    if (value < best.value) best = {value, r};
  }
  return best;
}

EffectReport qubit_effect_report(const HermitianOperator& m, const SqtParams& params) {
  if (m.dim() != 2) throw ValidationError("qubit_effect_membership: effect must be 2x2");
  EffectReport report;
  report.min_eigenvalue = min_eigenvalue(m);
  const BlochVector coeffs = BlochVector::from_operator(m);
  const BodyMinimum body = minimize_linear_over_body({coeffs.x, coeffs.y, coeffs.z}, params);
  report.min_probability = 0.5 * (m.trace() + body.value);
  report.worst_state = body.argmin;
  report.member = report.min_eigenvalue >= -kPsdClip && report.min_probability >= -kEffectTolerance;
  return report;
}

bool qubit_effect_membership(const HermitianOperator& m, const SqtParams& params) {
  return qubit_effect_report(m, params).member;
}

SqtState::SqtState(HermitianOperator op, SqtParams params)
    : op_(std::move(op)), params_(params) {
  const MembershipReport report = state_membership(op_, params_, 1e-12);
  if (!report.member) {
    throw ValidationError("SqtState: operator is outside the stretched state set");
  }
}

SqtState rho_kl(int k, int l, const SqtParams& params) {
  if ((k != 0 && k != 1) || (l != 0 && l != 1)) {
    throw ValidationError("rho_kl: k and l must be bits");
  }
  const double scale = q_of_tau(params.tau()) / std::numbers::sqrt2;
  const double sk = k == 0 ? 1.0 : -1.0;
  const double sl = l == 0 ? 1.0 : -1.0;
  HermitianOperator op =
      (pauli::z() * sk + pauli::x() * sl) * scale + HermitianOperator::identity(2) * 0.5;
  return SqtState(std::move(op), params);
}

}  // namespace gmplab::sqt
