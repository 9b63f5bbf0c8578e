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

#include "acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gmplab/boxes.hpp"
#include "gmplab/error.hpp"
#include "gmplab/eta.hpp"
#include "gmplab/gentle.hpp"
#include "gmplab/info.hpp"
#include "gmplab/linalg.hpp"
#include "gmplab/parallel.hpp"
#include "gmplab/random.hpp"
#include "gmplab/sqt.hpp"
#include "gmplab/vandam.hpp"

namespace gmplab::cli {

namespace {

using Clock = std::chrono::steady_clock;

SplitMix64 task_rng(std::uint64_t seed, int criterion, std::size_t index) {
  return SplitMix64::stream(SplitMix64::stream(seed, static_cast<std::uint64_t>(criterion)).next(),
                            index);
}

std::string fmt(double v) { return format_real(v); }

// Max over a parallel sweep; values are combined in index order so the result
// does not depend on scheduling.
struct SweepStats {
  std::size_t failures = 0;
  double worst = -INFINITY;
};

SweepStats sweep(std::size_t count, std::size_t threads,
                 const std::function<std::pair<bool, double>(std::size_t)>& trial) {
  std::vector<char> ok(count, 0);
  std::vector<double> value(count, 0.0);
  parallel_for(count, threads, [&](std::size_t i) {
    const auto [holds, v] = trial(i);
    ok[i] = holds ? 1 : 0;
    value[i] = v;
  });
  SweepStats stats;
  for (std::size_t i = 0; i < count; ++i) {
    if (!ok[i]) ++stats.failures;
    stats.worst = std::max(stats.worst, value[i]);
  }
  return stats;
}

CriterionResult gentle_lemma(std::uint64_t seed, std::size_t threads) {
  CriterionResult r{1, "gentle measurement lemma", false, {}, Json::object(), 0.0};
  const auto start = Clock::now();
  constexpr std::size_t kPerDim = 1000;
  const SweepStats stats = sweep(5 * kPerDim, threads, [&](std::size_t i) {
    const std::size_t dim = 2 + i / kPerDim;
    SplitMix64 rng = task_rng(seed, 1, i);
    const HermitianOperator rho = random_density(rng, dim);
    const HermitianOperator x = random_contraction(rng, dim);
    const GentleLemmaReport rep = gentle_lemma_check(rho, x);
    return std::pair{rep.holds, rep.lhs - rep.rhs};
  });
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.metrics = {{"cases", 5 * kPerDim}, {"violations", stats.failures},
               {"max_lhs_minus_rhs", stats.worst}};
  r.passed = stats.failures == 0 && r.seconds < 10.0;
  r.detail = std::to_string(5 * kPerDim - stats.failures) + "/5000 hold, max(lhs-rhs)=" +
             fmt(stats.worst) + ", runtime " + fmt(r.seconds) + " s (limit 10 s)";
  return r;
}

CriterionResult gmp_bound(std::uint64_t seed, std::size_t threads) {
  CriterionResult r{2, "GMP disturbance bound", false, {}, Json::object(), 0.0};
  constexpr std::size_t kTrials = 500;
  constexpr std::size_t kPurified = 100;
  const SweepStats stats = sweep(kTrials, threads, [&](std::size_t t) {
    SplitMix64 rng = task_rng(seed, 2, t);
    const std::size_t dim = 2 + t % 3;
    const std::size_t outcomes = 2 + (t / 3) % 3;
    const Povm povm = Povm::from_operators(random_povm_effects(rng, dim, outcomes));
    std::vector<double> weights(outcomes);
    double total = 0.0;
    for (auto& w : weights) total += (w = 0.1 + rng.uniform());
    std::vector<CqItem> items;
    for (std::size_t x = 0; x < outcomes; ++x) {
      HermitianOperator state = random_density(rng, dim);
      if (rng.uniform() < 0.5) {
        // Pull the state towards the top eigenvector of M_x so small eps occur.
        const Spectrum s = eigh(povm[x].op);
        std::vector<Complex> top(dim);
        for (std::size_t i = 0; i < dim; ++i) top[i] = s.eigenvectors(i, 0);
        const double mix = 0.2 * rng.uniform();
        state = HermitianOperator::projector(top) * (1.0 - mix) + state * mix;
      }
      items.push_back({weights[x] / total, std::to_string(x), state});
    }
    // Renormalize so the probabilities sum to one exactly as represented.
    double sum = 0.0;
    for (std::size_t x = 0; x + 1 < outcomes; ++x) sum += items[x].probability;
    items.back().probability = 1.0 - sum;
    const CqEnsemble ensemble(items);
    std::optional<std::vector<HermitianOperator>> refs;
    if (t < kPurified) {
      refs.emplace();
      for (const auto& item : items) refs->push_back(purify(item.state));
    }
    bool holds = true;
    double worst = -INFINITY;
    for (const auto& rep : gmp_disturbance(povm, ensemble, refs)) {
      holds = holds && rep.holds;
      worst = std::max(worst, rep.distance - rep.bound);
    }
    return std::pair{holds, worst};
  });
  r.metrics = {{"cases", kTrials}, {"purified_cases", kPurified}, {"violations", stats.failures},
               {"max_distance_minus_bound", stats.worst}};
  r.passed = stats.failures == 0;
  r.detail = std::to_string(kTrials - stats.failures) + "/500 hold (" +
             std::to_string(kPurified) + " with reference), max(d-eta)=" + fmt(stats.worst);
  return r;
}

CriterionResult rho_diagonals() {
  CriterionResult r{3, "rho_kl diagonals and spectrum", false, {}, Json::object(), 0.0};
  double diag_err = 0.0;
  double eig_err = 0.0;
  const auto fourier = sqt::fourier_basis(2);
  for (double tau : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const sqt::SqtParams params(tau);
    const double target = 1.0 - sqt::epsilon_of_tau(tau);
    for (int k = 0; k < 2; ++k) {
      for (int l = 0; l < 2; ++l) {
        const HermitianOperator rho = sqt::rho_kl(k, l, params).op();
        diag_err = std::max(diag_err, std::abs(rho.expectation(basis_ket(2, k)) - target));
        diag_err = std::max(diag_err, std::abs(rho.expectation(fourier[l]) - target));
        eig_err = std::max(eig_err, std::abs(min_eigenvalue(rho) + tau * sqt::kTheta));
      }
    }
  }
  r.metrics = {{"max_diagonal_error", diag_err}, {"max_min_eigenvalue_error", eig_err}};
  r.passed = diag_err <= 1e-12 && eig_err <= 1e-12;
  r.detail = "diag err " + fmt(diag_err) + ", eig err " + fmt(eig_err) + " (tol 1e-12)";
  return r;
}

CriterionResult qubit_body(std::uint64_t seed, std::size_t threads) {
  CriterionResult r{4, "SQT qubit body equivalence", false, {}, Json::object(), 0.0};
  constexpr std::size_t kPoints = 10000;
  const std::array<double, 3> taus{0.0, 0.5, 1.0};
  std::size_t disagreements = 0;
  std::size_t members = 0;
  for (std::size_t ti = 0; ti < taus.size(); ++ti) {
    const sqt::SqtParams params(taus[ti]);
    std::vector<char> agree(kPoints, 0);
    std::vector<char> in(kPoints, 0);
    parallel_for(kPoints, threads, [&](std::size_t i) {
      SplitMix64 rng = task_rng(seed, 4, ti * kPoints + i);
      const sqt::BlochVector b{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5),
                               rng.uniform(-1.5, 1.5)};
      const bool closed = sqt::qubit_state_body_membership(b, params);
      const bool direct = sqt::state_membership(b.to_operator(), params).member;
      agree[i] = closed == direct;
      in[i] = closed;
    });
    for (std::size_t i = 0; i < kPoints; ++i) {
      disagreements += agree[i] ? 0 : 1;
      members += in[i] ? 1 : 0;
    }
  }
  r.metrics = {{"points", 3 * kPoints}, {"disagreements", disagreements}, {"members", members}};
  r.passed = disagreements == 0;
  r.detail = std::to_string(disagreements) + " disagreements over 3x10^4 points (" +
             std::to_string(members) + " members)";
  return r;
}

CriterionResult chsh() {
  CriterionResult r{5, "CHSH isotropic boxes", false, {}, Json::object(), 0.0};
  double grid_err = 0.0;
  bool all_ns = true;
  for (int k = 0; k <= 100; ++k) {
    const double lambda = k / 100.0;
    const NoSignallingBox box = isotropic_box(lambda);
    grid_err = std::max(grid_err, std::abs(chsh_value(box) - 4.0 * lambda));
    all_ns = all_ns && signalling_witness(box.table()).is_ns;
  }
  const double tsirelson = chsh_value(isotropic_box(1.0 / std::numbers::sqrt2));
  const double t_err = std::abs(tsirelson - 2.828427124746);
  r.metrics = {{"max_grid_error", grid_err}, {"S_tsirelson", tsirelson}, {"all_no_signalling", all_ns}};
  r.passed = grid_err <= 1e-12 && t_err <= 1e-11 && all_ns;
  r.detail = "max|S-4l|=" + fmt(grid_err) + ", S(1/sqrt2)=" + fmt(tsirelson) +
             (all_ns ? ", all no-signalling" : ", signalling box found");
  return r;
}

CriterionResult lambda_criterion() {
  CriterionResult r{6, "GMP lambda bound", false, {}, Json::object(), 0.0};
  const double bound = lambda_bound(EtaFunction::quantum());
  r.metrics = {{"lambda_bound", bound}};
  r.passed = bound >= 0.89897 && bound <= 0.89899 && bound > 1.0 / std::numbers::sqrt2;
  r.detail = "lambda_bound=" + fmt(bound) + " in [0.89897, 0.89899], > 1/sqrt2";
  return r;
}

CriterionResult vandam_exact() {
  CriterionResult r{7, "van Dam closed form vs recursion", false, {}, Json::object(), 0.0};
  double max_diff = 0.0;
  bool agreed = true;
  for (int n = 1; n <= vandam::kMaxLayers; ++n) {
    for (int k = 0; k <= 10; ++k) {
      const double tau = k / 10.0;
      max_diff = std::max(max_diff, std::abs(vandam::success_probability_closed_form(n, tau) -
                                             vandam::success_probability_recursion(n, tau)));
      try {
        vandam::exact_success_probability(n, tau);
      } catch (const ToleranceError&) {
        agreed = false;
      }
    }
  }
  const double p = vandam::exact_success_probability(1, 0.5);
  r.metrics = {{"max_difference", max_diff}, {"P_n1_tau0.5", p}};
  r.passed = agreed && max_diff <= 1e-12 && std::abs(p - 0.926776695297) <= 1e-11;
  r.detail = "max|closed-recursion|=" + fmt(max_diff) + ", P(1,0.5)=" + fmt(p);
  return r;
}

CriterionResult vandam_mc(std::uint64_t seed, std::size_t threads) {
  CriterionResult r{8, "van Dam Monte Carlo", false, {}, Json::object(), 0.0};
  const auto start = Clock::now();
  std::size_t checked = 0;
  std::size_t outside = 0;
  double worst_z = 0.0;
  bool exact_at_one = true;
  Json runs = Json::array();
  int run_index = 0;
  for (double tau : {0.0, 0.5, 1.0}) {
    for (int n = 1; n <= 6; ++n) {
      const vandam::ProtocolConfig config{
          n, tau, 100000, SplitMix64::stream(seed, 8 * 1000 + run_index++).next()};
      std::vector<std::size_t> targets(std::size_t{1} << n);
      for (std::size_t i = 0; i < targets.size(); ++i) targets[i] = i;
      const vandam::RunReport rep = vandam::simulate(config, targets, threads);
      double run_worst = 0.0;
      for (const auto& t : rep.targets) {
        ++checked;
        if (tau == 1.0) {
          exact_at_one = exact_at_one && t.successes == config.trials;
          continue;
        }
        const double z = std::abs(t.frequency - rep.p_exact) / t.sigma;
        run_worst = std::max(run_worst, z);
        if (z > 4.0) ++outside;
      }
      worst_z = std::max(worst_z, run_worst);
      runs.push_back({{"n", n}, {"tau", tau}, {"p_exact", rep.p_exact}, {"max_z", run_worst}});
    }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.metrics = {{"targets_checked", checked}, {"outside_4sigma", outside}, {"max_z", worst_z},
               {"tau1_exact", exact_at_one}, {"runs", runs}};
  r.passed = outside == 0 && exact_at_one && r.seconds < 30.0;
  r.detail = std::to_string(checked) + " target frequencies, " + std::to_string(outside) +
             " outside 4 sigma (max z " + fmt(worst_z) + ")" +
             (exact_at_one ? ", tau=1 exact" : ", tau=1 NOT exact") + ", runtime " +
             fmt(r.seconds) + " s (limit 30 s)";
  return r;
}

CriterionResult chain_violation() {
  CriterionResult r{9, "chain-inequality violation", false, {}, Json::object(), 0.0};
  const double j1 = vandam::jn_exact(1, 0.5);
  const double j20 = vandam::jn_exact(20, 0.0);
  bool quantum_safe = true;
  for (int n = 1; n <= 20; ++n) quantum_safe = quantum_safe && vandam::jn_exact(n, 0.0) < 1.0;
  double worst_gap = INFINITY;
  for (int n = 1; n <= vandam::kMaxLayers; ++n) {
    for (int k = 0; k <= 10; ++k) {
      const double tau = k / 10.0;
      worst_gap = std::min(worst_gap, vandam::jn_exact(n, tau) - jn_lower_bound(tau, n));
    }
  }
  r.metrics = {{"jn_1_0.5", j1}, {"jn_20_0", j20}, {"quantum_below_one", quantum_safe},
               {"min_exact_minus_lower_bound", worst_gap}};
  r.passed = std::abs(j1 - 1.2444) <= 5e-4 && j1 > 1.0 && quantum_safe &&
             std::abs(j20 - 0.7213) <= 5e-4 && worst_gap >= -1e-12;
  r.detail = "J_1(0.5)=" + fmt(j1) + ", J_20(0)=" + fmt(j20) +
             (quantum_safe ? ", J_n(0)<1 for n<=20" : ", J_n(0)>=1 somewhere") +
             ", min(J-lb)=" + fmt(worst_gap);
  return r;
}

CriterionResult decoupling(std::uint64_t seed) {
  CriterionResult r{10, "decoupling", false, {}, Json::object(), 0.0};
  double mixing = 0.0, covariance = 0.0, protocol = 0.0, reg = 0.0;
  for (int k = 0; k <= 10; ++k) {
    const auto rep = vandam::decoupling_check(k / 10.0, SplitMix64::stream(seed, 10).next(), 4, 100);
    mixing = std::max(mixing, rep.mixing_error);
    covariance = std::max(covariance, rep.covariance_error);
    protocol = std::max(protocol, rep.protocol_error);
    reg = std::max(reg, rep.register_error);
  }
  r.metrics = {{"mixing_error", mixing}, {"covariance_error", covariance},
               {"protocol_error", protocol}, {"register_error", reg}};
  r.passed = mixing <= 1e-12 && covariance <= 1e-12 && protocol == 0.0 && reg <= 1e-12;
  r.detail = "mixing " + fmt(mixing) + ", covariance " + fmt(covariance) + ", per-qubit " +
             fmt(protocol) + " (must be 0), register " + fmt(reg);
  return r;
}

CriterionResult tau_bound() {
  CriterionResult r{11, "tau bound", false, {}, Json::object(), 0.0};
  const EtaFunction eta = EtaFunction::quantum();
  const TauBound tb = tau_bound_solver(eta);
  // Independent grid scan: last grid point with bound <= 1 and its successor.
  constexpr int kGrid = 10000;
  double lo = 0.0, hi = 1.0;
  for (int k = 0; k < kGrid; ++k) {
    const double t = static_cast<double>(k) / (kGrid - 1);
    if (fano_lower_bound(t, eta) <= 1.0) {
      lo = t;
      hi = static_cast<double>(k + 1) / (kGrid - 1);
    }
  }
  const double residual = std::abs(tb.fano_at_tau_star - 1.0);
  const bool in_bracket = tb.tau_star >= lo && tb.tau_star <= hi;
  r.metrics = {{"tau_star", tb.tau_star}, {"fano_at_tau_star", tb.fano_at_tau_star},
               {"solver_bracket", {tb.bracket_lo, tb.bracket_hi}}, {"grid_bracket", {lo, hi}}};
  r.passed = tb.tau_star > 0.0 && tb.tau_star < 1.0 && !tb.trivial && residual <= 1e-8 &&
             in_bracket && tb.bracket_hi - tb.bracket_lo <= 1e-10;
  r.detail = "tau*=" + fmt(tb.tau_star) + ", |F-1|=" + fmt(residual) + ", grid bracket [" +
             fmt(lo) + ", " + fmt(hi) + "]";
  return r;
}

CriterionResult appendix_b(std::uint64_t seed, std::size_t threads) {
  CriterionResult r{12, "classical-quantum decomposition lemmas", false, {}, Json::object(), 0.0};
  constexpr std::size_t kInstances = 100;
  const SweepStats kol = sweep(kInstances, threads, [&](std::size_t t) {
    SplitMix64 rng = task_rng(seed, 12, t);
    const std::size_t labels = 1 + rng.below(4);
    std::vector<double> p(labels);
    double total = 0.0;
    for (auto& v : p) total += (v = rng.uniform() + 0.05);
    for (auto& v : p) v /= total;
    std::vector<HermitianOperator> phis, psis;
    for (std::size_t x = 0; x < labels; ++x) {
      phis.push_back(random_density(rng, 2));
      psis.push_back(random_density(rng, 2));
    }
    const auto rep = kolmogorov_cq_decomposition_check(p, phis, psis);
    return std::pair{rep.error <= 1e-10, rep.error};
  });
  const SweepStats cg = sweep(kInstances, threads, [&](std::size_t t) {
    SplitMix64 rng = task_rng(seed, 12, kInstances + t);
    std::vector<double> p{rng.uniform() + 0.05, rng.uniform() + 0.05};
    const double total = p[0] + p[1];
    p[0] /= total;
    p[1] = 1.0 - p[0];
    const std::vector<HermitianOperator> states{random_density(rng, 2), random_density(rng, 2)};
    const HermitianOperator cq = cq_state(p, states);
    const Povm joint = Povm::from_operators(random_povm_effects(rng, 4, 2 + rng.below(3)));
    const auto rep = cg_measurement_decomposition_check(cq, joint);
    return std::pair{rep.max_error <= 1e-10, rep.max_error};
  });
  r.metrics = {{"kolmogorov_failures", kol.failures}, {"kolmogorov_max_error", kol.worst},
               {"measurement_failures", cg.failures}, {"measurement_max_error", cg.worst}};
  r.passed = kol.failures == 0 && cg.failures == 0;
  r.detail = "distance decomposition max err " + fmt(kol.worst) + ", measurement max err " +
             fmt(cg.worst) + " over 100+100 instances (tol 1e-10)";
  return r;
}

CriterionResult lemma35_and_pinsker(std::uint64_t seed, std::size_t threads) {
  CriterionResult r{13, "square-root concavity and Pinsker-like inequality", false, {}, Json::object(), 0.0};
  constexpr std::size_t kInstances = 10000;
  const SweepStats lemma = sweep(kInstances, threads, [&](std::size_t t) {
    SplitMix64 rng = task_rng(seed, 13, t);
    const double c = 0.05 + 0.95 * rng.uniform();
    const double eps = c * c * (1.0 - rng.uniform());  // (0, c^2]
    const std::size_t k = 2 + rng.below(4);
    std::vector<double> p(k), e(k);
    double total = 0.0;
    for (auto& v : p) total += (v = rng.uniform() + 1e-3);
    for (auto& v : p) v /= total;
    double mean = 0.0;
    for (std::size_t i = 0; i < k; ++i) mean += p[i] * (e[i] = c * rng.uniform());
    // Shrink towards zero until the mean constraint holds.
    if (mean > eps) {
      const double scale = eps / mean * (1.0 - 1e-9) * rng.uniform(0.5, 1.0);
      for (auto& v : e) v *= scale;
    }
    const std::function<double(double)> f =
        t % 2 == 0 ? std::function<double(double)>([](double x) { return x; })
                   : std::function<double(double)>(eta_quantum);
    const auto rep = lemma35_check(f, p, e, eps, c);
    return std::pair{rep.holds, rep.lhs - rep.rhs};
  });
  std::size_t pinsker_fail = 0;
  double pinsker_min = INFINITY;
  for (std::size_t i = 0; i < kInstances; ++i) {
    const double gap = pinsker_like_gap(static_cast<double>(i) / (kInstances - 1));
    pinsker_min = std::min(pinsker_min, gap);
    if (gap < -1e-12) ++pinsker_fail;
  }
  r.metrics = {{"lemma35_violations", lemma.failures}, {"lemma35_max_lhs_minus_rhs", lemma.worst},
               {"pinsker_violations", pinsker_fail}, {"pinsker_min_gap", pinsker_min}};
  r.passed = lemma.failures == 0 && pinsker_fail == 0;
  r.detail = "concavity: " + std::to_string(lemma.failures) + " violations (max lhs-rhs " +
             fmt(lemma.worst) + "); Pinsker-like: " + std::to_string(pinsker_fail) +
             " violations (min gap " + fmt(pinsker_min) + ")";
  return r;
}

}  // namespace

const std::vector<int>& acceptance_ids() {
  static const std::vector<int> ids{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14};
  return ids;
}

std::vector<CriterionResult> run_primary_criteria(std::uint64_t seed, std::size_t threads) {
  std::vector<CriterionResult> out;
  const auto timed = [&](const std::function<CriterionResult()>& fn) {
    const auto start = Clock::now();
    CriterionResult r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    if (r.seconds == 0.0) r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    out.push_back(std::move(r));
  };
  timed([&] { return gentle_lemma(seed, threads); });
  timed([&] { return gmp_bound(seed, threads); });
  timed([&] { return rho_diagonals(); });
  timed([&] { return qubit_body(seed, threads); });
  timed([&] { return chsh(); });
  timed([&] { return lambda_criterion(); });
  timed([&] { return vandam_exact(); });
  timed([&] { return vandam_mc(seed, threads); });
  timed([&] { return chain_violation(); });
  timed([&] { return decoupling(seed); });
  timed([&] { return tau_bound(); });
  timed([&] { return appendix_b(seed, threads); });
  timed([&] { return lemma35_and_pinsker(seed, threads); });
  // A criterion that threw still owns its id.
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].id == 0) out[i].id = static_cast<int>(i) + 1;
  }
  return out;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, std::size_t threads) {
  std::vector<CriterionResult> results = run_primary_criteria(seed, threads);

  const auto start = Clock::now();
  const std::size_t other_threads = threads == 1 ? 2 : 1;
  const std::vector<CriterionResult> rerun = run_primary_criteria(seed, other_threads);
  const std::string first = render_json(acceptance_primary_json(results, seed));
  const std::string second = render_json(acceptance_primary_json(rerun, seed));
  CriterionResult repro{14, "reproducibility", first == second, {}, Json::object(), 0.0};
  repro.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  repro.metrics = {{"bytes", first.size()}, {"identical", first == second}};
  repro.detail = std::string("rerun with ") + std::to_string(other_threads) + " thread(s): " +
                 (first == second ? "byte-identical" : "outputs differ");
  results.push_back(repro);

  std::map<int, int> seen;
  for (const auto& r : results) ++seen[r.id];
  for (int id : acceptance_ids()) {
    if (seen[id] != 1) throw std::logic_error("acceptance suite does not cover criterion " +
                                              std::to_string(id) + " exactly once");
  }
  if (seen.size() != acceptance_ids().size()) {
    throw std::logic_error("acceptance suite reports an unknown criterion id");
  }
  return results;
}

Json acceptance_primary_json(const std::vector<CriterionResult>& results, std::uint64_t seed) {
  Json doc;
  doc["seed"] = seed;
  Json list = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"metrics", r.metrics}});
  }
  doc["criteria"] = list;
  doc["all_passed"] = all;
  return doc;
}

std::string acceptance_csv(const std::vector<CriterionResult>& results) {
  std::vector<Row> rows;
  for (const auto& r : results) {
    rows.push_back({static_cast<std::int64_t>(r.id), r.name,
                    std::string(r.passed ? "pass" : "fail")});
  }
  return render_csv({"id", "name", "result"}, rows);
}

}  // namespace gmplab::cli
