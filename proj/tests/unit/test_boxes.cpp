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

#include "gmplab/boxes.hpp"
#include "gmplab/error.hpp"
#include "gmplab/eta.hpp"

using namespace gmplab;

TEST_CASE("PR box table") {
  const NoSignallingBox pr = pr_box();
  CHECK(pr(0, 0, 1, 1) == 0.0);
  CHECK(pr(0, 1, 1, 1) == 0.5);
  CHECK(pr(1, 1, 0, 0) == 0.5);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int r = 0; r < 2; ++r) {
        CHECK(pr(r, 0, i, j) + pr(r, 1, i, j) == 0.5);
        CHECK(pr(0, r, i, j) + pr(1, r, i, j) == 0.5);
      }
    }
  }
  CHECK(chsh_value(pr) == 4.0);
}

TEST_CASE("isotropic boxes") {
  const NoSignallingBox white = isotropic_box(0.0);
  for (double v : white.table()) CHECK(v == 0.25);
  CHECK(isotropic_box(1.0).table() == pr_box().table());
  const double l = 1.0 / std::numbers::sqrt2;
  CHECK(std::abs(isotropic_box(l)(0, 0, 0, 0) - 0.426776695296637) < 1e-14);
  CHECK_THROWS_AS(isotropic_box(-0.1), ValidationError);
  CHECK_THROWS_AS(isotropic_box(1.1), ValidationError);
}

TEST_CASE("CHSH values") {
  CHECK(std::abs(chsh_value(isotropic_box(0.5)) - 2.0) < 1e-12);
  CHECK(std::abs(chsh_value(isotropic_box(1.0 / std::numbers::sqrt2)) - 2.828427124746) < 1e-11);
  for (int k = 0; k <= 100; ++k) {
    const double lambda = k / 100.0;
    const NoSignallingBox box = isotropic_box(lambda);
    CHECK(std::abs(chsh_value(box) - 4.0 * lambda) <= 1e-12);
    CHECK(signalling_witness(box.table()).is_ns);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        CHECK(std::abs(correlator(box, i, j) - (i * j == 1 ? -lambda : lambda)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("conditional outcome probabilities") {
  const auto pr = conditional_outcome_probs(isotropic_box(1.0), 0, 0);
  CHECK(pr[0][0] == doctest::Approx(1.0));
  CHECK(pr[1][0] == doctest::Approx(1.0));

  const auto white = conditional_outcome_probs(isotropic_box(0.0), 1, 1);
  for (const auto& row : white) {
    for (double v : row) CHECK(v == doctest::Approx(0.5));
  }

  const auto c = conditional_outcome_probs(isotropic_box(0.6), 1, 1);
  CHECK(std::abs(c[0][1] - 0.8) < 1e-12);
  CHECK(std::abs(c[1][0] - 0.8) < 1e-12);

  for (int k = 0; k <= 20; ++k) {
    const double lambda = k / 20.0;
    const NoSignallingBox box = isotropic_box(lambda);
    for (int i = 0; i < 2; ++i) {
      for (int r = 0; r < 2; ++r) {
        const auto t = conditional_outcome_probs(box, i, r);
        for (int j = 0; j < 2; ++j) {
          for (int s = 0; s < 2; ++s) {
            const double expected = lambda * (((r ^ s) == i * j) ? 1.0 : 0.0) + (1.0 - lambda) / 2.0;
            CHECK(std::abs(t[j][s] - expected) <= 1e-12);
          }
        }
      }
    }
  }
}

TEST_CASE("conditioning on an impossible outcome fails") {
  BoxTable t{};
  for (int s = 0; s < 2; ++s) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) t[box_index(0, s, i, j)] = 0.5;
    }
  }
  const NoSignallingBox box(t);
  CHECK_THROWS_AS(conditional_outcome_probs(box, 0, 1), ConditioningError);
}

TEST_CASE("box validation") {
  BoxTable t = isotropic_box(0.3).table();
  t[box_index(0, 0, 0, 0)] += 0.1;
  t[box_index(0, 1, 0, 0)] -= 0.1;  // normalized, but Bob's marginal now depends on i
  CHECK_THROWS_AS(NoSignallingBox{t}, ValidationError);
  BoxTable neg = isotropic_box(0.0).table();
  neg[0] = -0.25;
  neg[1] = 0.75;
  CHECK_THROWS_AS(NoSignallingBox{neg}, ValidationError);
}

TEST_CASE("signalling witness") {
  CHECK(signalling_witness(pr_box().table()).is_ns);

  BoxTable local{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) local[box_index(i, 0, i, j)] = 1.0;
  }
  const auto lr = signalling_witness(local);
  CHECK(lr.is_ns);
  CHECK(lr.max_violation == 0.0);

  // Uniform box with Bob's p(s = 0 | j) raised by 0.3 when Alice inputs i = 1.
  BoxTable t = isotropic_box(0.0).table();
  for (int j = 0; j < 2; ++j) {
    for (int r = 0; r < 2; ++r) {
      t[box_index(r, 0, 1, j)] += 0.15;
      t[box_index(r, 1, 1, j)] -= 0.15;
    }
  }
  const auto rep = signalling_witness(t);
  CHECK_FALSE(rep.is_ns);
  CHECK(std::abs(rep.max_violation - 0.3) < 1e-12);
}

TEST_CASE("lambda bound") {
  const double q = lambda_bound(EtaFunction::quantum());
  CHECK(std::abs(q - 0.898979485566356) < 1e-12);
  CHECK(q > 1.0 / std::numbers::sqrt2);
  CHECK(q < 1.0);
  const EtaFunction linear("linear", [](double e) { return e; });
  CHECK(std::abs(lambda_bound(linear) - 0.5) < 1e-12);
  const EtaFunction small("small", [](double e) { return 0.1 * e; });
  CHECK_THROWS_AS(lambda_bound(small), DomainError);
}
