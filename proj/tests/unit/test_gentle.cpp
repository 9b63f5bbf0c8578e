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
#include <optional>
#include <vector>

#include "gmplab/error.hpp"
#include "gmplab/gentle.hpp"
#include "gmplab/linalg.hpp"
#include "gmplab/random.hpp"
#include "gmplab/sqt.hpp"

using namespace gmplab;

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

HermitianOperator ket_projector(std::size_t dim, std::size_t i) {
  return HermitianOperator::projector(basis_ket(dim, i));
}

// Full operator E (x) id(phi) - phi (x) |x><x| on X (x) A(R), built as one
// block-diagonal matrix and measured with the dense trace norm.
double full_register_distance(const Povm& povm, std::size_t x, const HermitianOperator& phi) {
  const std::size_t d = phi.dim();
  const std::size_t a = povm.dim();
  const std::size_t n = povm.size();
  ComplexMatrix full(n * d);
  for (std::size_t y = 0; y < n; ++y) {
    const HermitianOperator root = psd_sqrt(povm[y].op);
    const ComplexMatrix k = kron(root.matrix(), ComplexMatrix::identity(d / a));
    ComplexMatrix block = k * phi.matrix() * k.adjoint();
    if (y == x) block -= phi.matrix();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) full(y * d + i, y * d + j) = block(i, j);
    }
  }
  return 0.5 * trace_norm(HermitianOperator(full));
}

CqEnsemble two_state_ensemble(const HermitianOperator& a, const HermitianOperator& b) {
  return CqEnsemble({{0.5, "0", a}, {0.5, "1", b}});
}

}  // namespace

TEST_CASE("povm validation") {
  CHECK_NOTHROW(Povm::computational(3));
  CHECK(Povm::computational(3)[2].label == "2");
  CHECK_THROWS_AS(Povm::from_operators({ket_projector(2, 0)}), ValidationError);
  CHECK_THROWS_AS(Povm::from_operators({pauli::z() * 0.5 + HermitianOperator::identity(2) * 0.5,
                                        HermitianOperator::identity(2) * 0.5 - pauli::z() * 0.5,
                                        HermitianOperator::zero(2)})
                      .index_of("x"),
                  ValidationError);
  const auto bad = HermitianOperator::identity(2) + pauli::z() * 1.5;
  CHECK_THROWS_AS(Povm::from_operators({bad * 0.5, HermitianOperator::identity(2) - bad * 0.5}),
                  ValidationError);
  CHECK_THROWS_AS(Povm({{"a", ket_projector(2, 0)}, {"a", ket_projector(2, 1)}}), ValidationError);
  CHECK(Povm::trivial(4).size() == 1);
}

TEST_CASE("stretched-mode povm uses the effect cone") {
  const sqt::SqtParams params(1.0);
  CHECK_NOTHROW(Povm(Povm::computational(2).effects(), params));
  CHECK_NOTHROW(Povm(Povm::fourier(2).effects(), params));
  const auto tilted = (HermitianOperator::identity(2) - (pauli::x() + pauli::z()) * kInvSqrt2) * 0.5;
  const auto rest = HermitianOperator::identity(2) - tilted;
  CHECK_NOTHROW(Povm::from_operators({tilted, rest}));
  CHECK_THROWS_AS(Povm({{"0", tilted}, {"1", rest}}, params), ValidationError);
  CHECK(Povm(Povm::computational(2).effects(), params).mode() == Povm::Mode::kSqt);
}

TEST_CASE("cq ensemble validation") {
  CHECK_THROWS_AS(CqEnsemble({{0.4, "0", ket_projector(2, 0)}, {0.5, "1", ket_projector(2, 1)}}),
                  ValidationError);
  CHECK_THROWS_AS(CqEnsemble({{1.0, "0", HermitianOperator::identity(2)}}), ValidationError);
}

TEST_CASE("gentle channel examples") {
  const auto ch = gentle_channel(Povm::computational(2));
  const auto branches = ch.apply(ket_projector(2, 0));
  REQUIRE(branches.size() == 2);
  CHECK(branches[0].weight == doctest::Approx(1.0));
  CHECK(max_abs_diff(branches[0].state.matrix(), ket_projector(2, 0).matrix()) < 1e-15);
  CHECK(branches[1].weight == doctest::Approx(0.0));

  SplitMix64 rng(1);
  const auto rho = random_density(rng, 3);
  const auto half = HermitianOperator::identity(3) * 0.5;
  for (const auto& b : gentle_channel(Povm::from_operators({half, half})).apply(rho)) {
    CHECK(max_abs_diff(b.state.matrix(), (rho * 0.5).matrix()) < 1e-14);
  }

  const auto fb = gentle_channel(Povm::fourier(2)).apply(ket_projector(2, 0));
  const std::vector<Complex> plus{kInvSqrt2, kInvSqrt2};
  const std::vector<Complex> minus{kInvSqrt2, -kInvSqrt2};
  CHECK(fb[0].weight == doctest::Approx(0.5));
  CHECK(max_abs_diff(fb[0].state.matrix(), (HermitianOperator::projector(plus) * 0.5).matrix()) < 1e-15);
  CHECK(max_abs_diff(fb[1].state.matrix(), (HermitianOperator::projector(minus) * 0.5).matrix()) < 1e-15);
}

TEST_CASE("gentle channel branches sum to a unit-trace operator") {
  SplitMix64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const std::size_t dim = 2 + rng.below(3);
    const Povm povm = Povm::from_operators(random_povm_effects(rng, dim, 2 + rng.below(3)));
    const auto rho = random_density(rng, dim);
    double total = 0.0;
    for (std::size_t x = 0; x < povm.size(); ++x) {
      const auto b = gentle_channel(povm).apply_branch(x, rho);
      CHECK(std::abs(b.trace() - povm[x].op.expectation(rho)) < 1e-12);
      total += b.trace();
    }
    CHECK(std::abs(total - 1.0) < 1e-12);
  }
}

TEST_CASE("gentle measurement lemma examples") {
  const auto r1 = gentle_lemma_check(ket_projector(2, 0), HermitianOperator::identity(2));
  CHECK(r1.lhs == doctest::Approx(0.0));
  CHECK(r1.rhs == doctest::Approx(0.0));
  CHECK(r1.holds);

  const auto r2 = gentle_lemma_check(HermitianOperator::identity(2) * 0.5, ket_projector(2, 0));
  CHECK(std::abs(r2.lhs - 0.5) < 1e-14);
  CHECK(std::abs(r2.rhs - std::numbers::sqrt2) < 1e-14);
  CHECK(r2.holds);

  CHECK_THROWS_AS(gentle_lemma_check(HermitianOperator::identity(2), ket_projector(2, 0)), ValidationError);
  CHECK_THROWS_AS(gentle_lemma_check(ket_projector(2, 0), HermitianOperator::identity(2) * 1.1),
                  ValidationError);
}

TEST_CASE("gentle measurement lemma on random pairs") {
  for (std::size_t dim = 2; dim <= 6; ++dim) {
    SplitMix64 rng(100 + dim);
    for (int t = 0; t < 1000; ++t) {
      const auto rho = random_density(rng, dim, 1 + rng.below(dim));
      const auto x = random_contraction(rng, dim);
      REQUIRE(gentle_lemma_check(rho, x).holds);
    }
  }
}

TEST_CASE("GMP disturbance examples") {
  const Povm z = Povm::computational(2);
  for (const auto& r : gmp_disturbance(z, two_state_ensemble(ket_projector(2, 0), ket_projector(2, 1)))) {
    CHECK(r.eps == doctest::Approx(0.0));
    CHECK(r.distance == doctest::Approx(0.0));
    CHECK(r.holds);
  }

  const sqt::SqtParams quantum(0.0);
  const auto rho00 = sqt::rho_kl(0, 0, quantum).op();
  const auto rho11 = sqt::rho_kl(1, 1, quantum).op();
  const auto reports = gmp_disturbance(z, two_state_ensemble(rho00, rho11));
  for (const auto& r : reports) {
    CHECK(std::abs(r.eps - sqt::epsilon_of_tau(0.0)) < 1e-12);
    CHECK(r.distance <= 0.4559);
    CHECK(std::abs(r.bound - 0.455906737068453) < 1e-12);
    CHECK(r.holds);
  }
  CHECK(std::abs(reports[0].distance - full_register_distance(z, 0, rho00)) < 1e-12);
}

TEST_CASE("GMP disturbance with a purifying reference") {
  const sqt::SqtParams quantum(0.0);
  const auto rho00 = sqt::rho_kl(0, 0, quantum).op();
  const auto rho11 = sqt::rho_kl(1, 1, quantum).op();
  const std::vector<HermitianOperator> refs{purify(rho00), purify(rho11)};
  const Povm z = Povm::computational(2);
  const auto reports = gmp_disturbance(z, two_state_ensemble(rho00, rho11), refs);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(reports[i].holds);
    CHECK(std::abs(reports[i].distance - full_register_distance(z, i, refs[i])) < 1e-12);
  }
  // A reference can only increase the disturbance.
  const auto plain = gmp_disturbance(z, two_state_ensemble(rho00, rho11));
  CHECK(reports[0].distance >= plain[0].distance - 1e-12);

  const std::vector<HermitianOperator> wrong{purify(rho11), purify(rho11)};
  CHECK_THROWS_AS(gmp_disturbance(z, two_state_ensemble(rho00, rho11), wrong), ValidationError);
}

TEST_CASE("GMP block split matches the full register operator") {
  SplitMix64 rng(9);
  for (int t = 0; t < 500; ++t) {
    const std::size_t dim = 2 + rng.below(3);
    const std::size_t outcomes = 2 + rng.below(3);
    const Povm povm = Povm::from_operators(random_povm_effects(rng, dim, outcomes));
    std::vector<CqItem> items;
    for (std::size_t x = 0; x < outcomes; ++x) {
      items.push_back({1.0 / static_cast<double>(outcomes), std::to_string(x), random_density(rng, dim)});
    }
    double s = 0.0;
    for (std::size_t x = 0; x + 1 < outcomes; ++x) s += items[x].probability;
    items.back().probability = 1.0 - s;
    const CqEnsemble ens(items);
    std::optional<std::vector<HermitianOperator>> refs;
    if (t < 100) {
      refs.emplace();
      for (const auto& it : items) refs->push_back(purify(it.state));
    }
    const auto reports = gmp_disturbance(povm, ens, refs);
    for (std::size_t x = 0; x < outcomes; ++x) {
      REQUIRE(reports[x].holds);
      const auto& phi = refs ? (*refs)[x] : items[x].state;
      REQUIRE(std::abs(reports[x].distance - full_register_distance(povm, x, phi)) < 1e-10);
    }
  }
}

TEST_CASE("simultaneous povm examples") {
  const Povm z = Povm::computational(2);
  const Povm x = Povm::fourier(2);
  const Povm zz = simultaneous_povm(z, z);
  REQUIRE(zz.size() == 4);
  CHECK(zz[0].label == "0,0");
  CHECK(max_abs_diff(zz[0].op.matrix(), ket_projector(2, 0).matrix()) < 1e-15);
  CHECK(max_abs_diff(zz[1].op.matrix(), ComplexMatrix(2)) < 1e-15);
  CHECK(max_abs_diff(zz[3].op.matrix(), ket_projector(2, 1).matrix()) < 1e-15);

  const Povm zx = simultaneous_povm(z, x);
  const sqt::SqtParams quantum(0.0);
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      CHECK(max_abs_diff(zx[2 * k + l].op.matrix(), (ket_projector(2, k) * 0.5).matrix()) < 1e-15);
      const double p = zx[2 * k + l].op.expectation(sqt::rho_kl(k, l, quantum).op());
      CHECK(std::abs(p - 0.5 * (1.0 - sqt::epsilon_of_tau(0.0))) < 1e-12);
      CHECK(p >= 1.0 - 2.0 * eta_quantum(sqt::epsilon_of_tau(0.0)));
    }
  }

  SplitMix64 rng(4);
  const Povm nu = Povm::from_operators(random_povm_effects(rng, 3, 3));
  const Povm same = simultaneous_povm(Povm::trivial(3), nu);
  for (std::size_t y = 0; y < nu.size(); ++y) {
    CHECK(max_abs_diff(same[y].op.matrix(), nu[y].op.matrix()) < 1e-12);
  }
}

TEST_CASE("simultaneous povm is complete and equals the two-step procedure") {
  SplitMix64 rng(6);
  for (int t = 0; t < 200; ++t) {
    const std::size_t dim = 2 + rng.below(3);
    const Povm mu = Povm::from_operators(random_povm_effects(rng, dim, 2 + rng.below(3)));
    const Povm nu = Povm::from_operators(random_povm_effects(rng, dim, 2 + rng.below(3)));
    const auto phi = random_density(rng, dim);
    const Povm xi = simultaneous_povm(mu, nu);
    HermitianOperator sum = HermitianOperator::zero(dim);
    for (const auto& e : xi.effects()) sum += e.op;
    REQUIRE(max_abs_diff(sum.matrix(), ComplexMatrix::identity(dim)) <= 1e-10);
    const GentleChannel ch(mu);
    for (std::size_t x = 0; x < mu.size(); ++x) {
      const auto branch = ch.apply_branch(x, phi);
      for (std::size_t y = 0; y < nu.size(); ++y) {
        REQUIRE(std::abs(xi[x * nu.size() + y].op.expectation(phi) - nu[y].op.expectation(branch)) < 1e-12);
      }
    }
  }
}

TEST_CASE("partitioned uncertainty relation") {
  const Povm z = Povm::computational(2);
  const Povm x = Povm::fourier(2);
  const EtaFunction eta = EtaFunction::quantum();
  const sqt::SqtParams quantum(0.0);

  PairStates rho;
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t l = 0; l < 2; ++l) rho[{k, l}] = sqt::rho_kl(static_cast<int>(k), static_cast<int>(l), quantum).op();
  }
  const auto single = partitioned_uncertainty_check(z, x, {{{0, 1}, {0, 1}}}, rho, eta);
  CHECK(std::abs(single.eps - sqt::epsilon_of_tau(0.0)) < 1e-12);
  CHECK(std::abs(single.bound - (1.0 - 2.0 * 0.455906737068453)) < 1e-12);
  CHECK(single.pairs.size() == 4);
  CHECK(single.all_hold);

  PairStates diag{{{0, 0}, ket_projector(2, 0)}, {{1, 1}, ket_projector(2, 1)}};
  const auto compat = partitioned_uncertainty_check(z, z, {{{0}, {0}}, {{1}, {1}}}, diag, eta);
  CHECK(compat.eps == doctest::Approx(0.0));
  CHECK(compat.bound == doctest::Approx(1.0));
  for (const auto& p : compat.pairs) CHECK(p.probability == doctest::Approx(1.0));

  CHECK_THROWS_AS(partitioned_uncertainty_check(z, z, {{{0}, {0}}, {{0, 1}, {1}}}, diag, eta), ValidationError);
  CHECK_THROWS_AS(partitioned_uncertainty_check(z, z, {{{0}, {0}}}, diag, eta), ValidationError);
  CHECK_THROWS_AS(partitioned_uncertainty_check(z, x, {{{0, 1}, {0, 1}}}, rho, eta, 0.01), ValidationError);
}

TEST_CASE("four-outcome partitioned relation on two qubits") {
  const sqt::SqtParams quantum(0.0);
  const Povm zz = Povm::computational(4);
  std::vector<HermitianOperator> xx_ops;
  const auto fx = sqt::fourier_basis(2);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      xx_ops.push_back(tensor(HermitianOperator::projector(fx[a]), HermitianOperator::projector(fx[b])));
    }
  }
  const Povm xx = Povm::from_operators(xx_ops);
  PairStates states;
  std::vector<OutcomeBlock> blocks;
  for (std::size_t b = 0; b < 2; ++b) {
    blocks.push_back({{2 * b, 2 * b + 1}, {2 * b, 2 * b + 1}});
    for (std::size_t x2 = 0; x2 < 2; ++x2) {
      for (std::size_t y2 = 0; y2 < 2; ++y2) {
        states[{2 * b + x2, 2 * b + y2}] =
            tensor(sqt::rho_kl(static_cast<int>(b), static_cast<int>(b), quantum).op(),
                   sqt::rho_kl(static_cast<int>(x2), static_cast<int>(y2), quantum).op());
      }
    }
  }
  const auto rep = partitioned_uncertainty_check(zz, xx, blocks, states, EtaFunction::quantum());
  CHECK(rep.pairs.size() == 8);
  CHECK(rep.all_hold);
}
