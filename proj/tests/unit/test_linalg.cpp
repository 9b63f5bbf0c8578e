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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "gmplab/error.hpp"
#include "gmplab/linalg.hpp"
#include "gmplab/random.hpp"
#include "gmplab/sqt.hpp"

using namespace gmplab;

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

std::vector<Complex> plus_ket() { return {kInvSqrt2, kInvSqrt2}; }

HermitianOperator bell_projector() {
  const std::vector<Complex> phi{kInvSqrt2, 0.0, 0.0, kInvSqrt2};
  return HermitianOperator::projector(phi).with_subsystems({2, 2});
}

double unitarity_error(const ComplexMatrix& u) {
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.dim()));
}

}  // namespace

TEST_CASE("tensor builds Kronecker products") {
  const auto id4 = tensor(HermitianOperator::identity(2), HermitianOperator::identity(2));
  CHECK(max_abs_diff(id4.matrix(), ComplexMatrix::identity(4)) == 0.0);
  CHECK(id4.subsystem_dims() == std::vector<std::size_t>{2, 2});

  const auto zz = tensor(pauli::z(), pauli::z());
  const std::vector<double> expected{1, -1, -1, 1};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(zz(i) == expected[i]);
    for (std::size_t j = 0; j < 4; ++j) {
      if (i != j) CHECK(std::abs(zz(i, j)) == 0.0);
    }
  }

  const auto p = tensor(HermitianOperator::projector(basis_ket(2, 0)),
                        HermitianOperator::projector(plus_ket()));
  const Spectrum s = eigh(p);
  CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(s.eigenvalues[i]) < 1e-12);
}

TEST_CASE("partial trace") {
  SplitMix64 rng(7);
  const auto rho = random_density(rng, 3);
  const auto sigma = random_unit_trace_hermitian(rng, 2) * 2.5;
  const auto joint = tensor(rho, sigma);
  const auto kept = partial_trace(joint, {0});
  CHECK(max_abs_diff(kept.matrix(), (rho * sigma.trace()).matrix()) < 1e-12);

  const auto half = partial_trace(bell_projector(), {1});
  CHECK(max_abs_diff(half.matrix(), ComplexMatrix::identity(2) * Complex(0.5)) < 1e-15);

  const auto all = partial_trace(joint, {0, 1});
  CHECK(max_abs_diff(all.matrix(), joint.matrix()) == 0.0);

  const auto abc = tensor(tensor(random_density(rng, 2), random_density(rng, 3)), random_density(rng, 2));
  for (std::size_t keep = 0; keep < 3; ++keep) {
    const std::vector<std::size_t> k{keep};
    CHECK(partial_trace(abc, k).trace() == doctest::Approx(abc.trace()).epsilon(1e-12));
  }
  CHECK_THROWS_AS(partial_trace(abc, {3}), ValidationError);
}

TEST_CASE("partial trace of a three-party product keeps factor order") {
  SplitMix64 rng(11);
  const auto a = random_density(rng, 2);
  const auto b = random_density(rng, 3);
  const auto c = random_density(rng, 2);
  const auto abc = tensor(tensor(a, b), c);
  const auto ac = partial_trace(abc, {0, 2});
  CHECK(max_abs_diff(ac.matrix(), tensor(a, c).matrix()) < 1e-14);
  const auto b_only = partial_trace(abc, {1});
  CHECK(max_abs_diff(b_only.matrix(), b.matrix()) < 1e-14);
}

TEST_CASE("eigh spectra") {
  const Spectrum sx = eigh(pauli::x());
  CHECK(sx.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sx.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-14));

  const Spectrum id = eigh(HermitianOperator::identity(5));
  for (double v : id.eigenvalues) CHECK(v == 1.0);

  const auto rho = sqt::rho_kl(0, 0, sqt::SqtParams(1.0)).op();
  const Spectrum s = eigh(rho);
  CHECK(std::abs(s.eigenvalues[0] - (0.5 + kInvSqrt2)) < 1e-14);
  CHECK(std::abs(s.eigenvalues[1] - (0.5 - kInvSqrt2)) < 1e-14);
}

TEST_CASE("eigh matches the tridiagonal closed form") {
  // tridiag(-1, 2, -1) has eigenvalues 2 - 2 cos(k pi / (n + 1)).
  for (std::size_t n : {3u, 8u, 33u}) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 2.0;
      if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = -1.0;
    }
    const Spectrum s = eigh(HermitianOperator(m));
    for (std::size_t k = 1; k <= n; ++k) {
      const double expected = 2.0 - 2.0 * std::cos(static_cast<double>(n + 1 - k) * std::numbers::pi /
                                                   static_cast<double>(n + 1));
      CHECK(std::abs(s.eigenvalues[k - 1] - expected) < 1e-12);
    }
  }
}

TEST_CASE("eigh reconstruction and unitarity on random Hermitians") {
  SplitMix64 rng(2024);
  for (std::size_t dim : {1u, 2u, 3u, 5u, 8u, 16u, 64u}) {
    const auto h = random_hermitian(rng, dim);
    const Spectrum s = eigh(h);
    CHECK(max_abs_diff(s.reconstruct(), h.matrix()) <= 1e-10);
    CHECK(unitarity_error(s.eigenvectors) <= 1e-10);
    for (std::size_t i = 1; i < dim; ++i) CHECK(s.eigenvalues[i - 1] >= s.eigenvalues[i]);
  }
}

TEST_CASE("eigh rejects non-Hermitian input") {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(eigh(m), ValidationError);
  CHECK_THROWS_AS(HermitianOperator{m}, ValidationError);
  ComplexMatrix tiny(2);
  tiny(0, 1) = Complex(0.0, 1e-14);
  CHECK_NOTHROW(HermitianOperator{tiny});
}

TEST_CASE("subsystem dims must multiply to the dimension") {
  CHECK_THROWS_AS(HermitianOperator(ComplexMatrix::identity(4), {2, 3}), ValidationError);
  CHECK_NOTHROW(HermitianOperator(ComplexMatrix::identity(6), {2, 3}));
}

TEST_CASE("trace norm and trace distance") {
  CHECK(trace_norm(pauli::z()) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(trace_norm(HermitianOperator::zero(3)) == 0.0);
  const auto zero = HermitianOperator::projector(basis_ket(2, 0));
  const auto one = HermitianOperator::projector(basis_ket(2, 1));
  const auto plus = HermitianOperator::projector(plus_ket());
  CHECK(std::abs(trace_norm(zero - plus) - std::numbers::sqrt2) < 1e-14);
  CHECK(std::abs(trace_distance(zero, one) - 1.0) < 1e-14);
  CHECK(trace_distance(plus, plus) == doctest::Approx(0.0));
  CHECK(std::abs(trace_distance(zero, plus) - kInvSqrt2) < 1e-14);
  CHECK_THROWS_AS(trace_distance(zero, HermitianOperator::identity(3) * (1.0 / 3.0)), ValidationError);
}

TEST_CASE("trace distance is a metric on random operators") {
  SplitMix64 rng(99);
  for (int t = 0; t < 300; ++t) {
    const std::size_t dim = 2 + rng.below(7);
    const auto a = random_unit_trace_hermitian(rng, dim);
    const auto b = random_density(rng, dim);
    const auto c = random_unit_trace_hermitian(rng, dim);
    const double ab = trace_distance(a, b);
    CHECK(ab <= trace_distance(a, c) + trace_distance(c, b) + 1e-10);
    CHECK(std::abs(ab - trace_distance(b, a)) < 1e-12);
    CHECK(ab >= 0.0);
  }
}

TEST_CASE("trace distance contracts under partial trace") {
  SplitMix64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const auto rho = random_unit_trace_hermitian(rng, 4).with_subsystems({2, 2});
    const auto sigma = random_unit_trace_hermitian(rng, 4).with_subsystems({2, 2});
    for (std::size_t keep : {0u, 1u}) {
      const std::vector<std::size_t> k{keep};
      CHECK(trace_distance(partial_trace(rho, k), partial_trace(sigma, k)) <=
            trace_distance(rho, sigma) + 1e-10);
    }
  }
}

TEST_CASE("psd square root") {
  const auto id = psd_sqrt(HermitianOperator::identity(3));
  CHECK(max_abs_diff(id.matrix(), ComplexMatrix::identity(3)) < 1e-14);

  const auto p0 = HermitianOperator::projector(basis_ket(2, 0));
  CHECK(max_abs_diff(psd_sqrt(p0 * 4.0).matrix(), (p0 * 2.0).matrix()) < 1e-14);

  const auto half = (HermitianOperator::identity(2) + pauli::x()) * 0.5;
  CHECK(max_abs_diff(psd_sqrt(half).matrix(), HermitianOperator::projector(plus_ket()).matrix()) < 1e-14);

  SplitMix64 rng(3);
  for (std::size_t dim : {2u, 4u, 7u}) {
    const auto m = random_density(rng, dim, 2);  // rank deficient
    const auto r = psd_sqrt(m);
    CHECK(max_abs_diff(r.matrix() * r.matrix(), m.matrix()) <= 1e-9);
    CHECK(is_psd(r));
  }
}

TEST_CASE("psd square root clips tiny negatives and rejects real ones") {
  const std::vector<double> tiny{1.0, -5e-11};
  CHECK_NOTHROW(psd_sqrt(HermitianOperator::diagonal(tiny)));
  const std::vector<double> negative{1.0, -1e-6};
  CHECK_THROWS_AS(psd_sqrt(HermitianOperator::diagonal(negative)), NotPsdError);
  CHECK_THROWS_AS(psd_sqrt(sqt::rho_kl(0, 0, sqt::SqtParams(0.5)).op()), NotPsdError);
}
