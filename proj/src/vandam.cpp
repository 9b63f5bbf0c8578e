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

#include "gmplab/vandam.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numbers>

#include "gmplab/error.hpp"
#include "gmplab/gentle.hpp"
#include "gmplab/info.hpp"
#include "gmplab/parallel.hpp"
#include "gmplab/sqt.hpp"

namespace gmplab::vandam {

namespace {

constexpr std::uint64_t kChunkTrials = 1 << 14;
constexpr double kExactTolerance = 1e-12;

// Probability of outcome 0 for qubit state rho_kl measured in basis b (0 = z, 1 = x).
using OutcomeTable = std::array<std::array<std::array<double, 2>, 2>, 2>;

OutcomeTable outcome_table(const sqt::SqtParams& params) {
  const Povm z(Povm::computational(2).effects(), params);
  const Povm x(Povm::fourier(2).effects(), params);
  OutcomeTable table{};
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      const HermitianOperator rho = sqt::rho_kl(k, l, params).op();
      table[k][l][0] = z[0].op.expectation(rho);
      table[k][l][1] = x[0].op.expectation(rho);
    }
  }
  return table;
}

int target_bit(std::size_t index, int n, int j) {
  return static_cast<int>((index >> (n - 1 - j)) & 1u);
}

bool decode_once(const LayeredEncoding& enc, std::size_t target, const OutcomeTable& table,
                 SplitMix64& rng) {
  const int n = enc.n();
  std::size_t gamma = 0;
  int guess = enc.bit(0, 0);  // the decoder holds M
  for (int alpha = 0; alpha < n; ++alpha) {
    const int b = target_bit(target, n, alpha);
    const auto [k, l] = enc.qubit_state(alpha, gamma);
    const int outcome = rng.uniform() < table[k][l][b] ? 0 : 1;
    guess ^= outcome;
    gamma = 2 * gamma + static_cast<std::size_t>(b);
  }
  return guess == enc.bit(n, gamma);
}

double max_abs_from_half_identity(const HermitianOperator& rho) {
  return max_abs_diff(rho.matrix(), ComplexMatrix::identity(rho.dim()) * Complex(0.5));
}

}  // namespace

void ProtocolConfig::validate() const {
  if (n < 1 || n > kMaxLayers) throw ValidationError("vandam: n must lie in [1, 24]");
  if (!(tau >= 0.0 && tau <= 1.0)) throw ValidationError("vandam: tau must lie in [0, 1]");
  if (trials < 1) throw ValidationError("vandam: trials must be positive");
}

double tau_prime(double tau) {
  return (1.0 + (std::numbers::sqrt2 - 1.0) * tau) / std::numbers::sqrt2;
}

double success_probability_closed_form(int n, double tau) {
  return 0.5 * (1.0 + std::pow(tau_prime(tau), n));
}

double success_probability_recursion(int n, double tau) {
  const double layer_success = 1.0 - sqt::epsilon_of_tau(tau);
  double correct = 1.0;  // kappa_0 = 1: M is known exactly
  for (int alpha = 0; alpha < n; ++alpha) {
    correct = layer_success * correct + (1.0 - layer_success) * (1.0 - correct);
  }
  return correct;
}

double exact_success_probability(int n, double tau) {
  ProtocolConfig{n, tau, 1, 0}.validate();
  const double closed = success_probability_closed_form(n, tau);
  const double recursed = success_probability_recursion(n, tau);
  if (std::abs(closed - recursed) > kExactTolerance) {
    throw ToleranceError("vandam: closed form and recursion disagree");
  }
  return closed;
}

// ----------------------------------------------------------- LayeredEncoding

LayeredEncoding::LayeredEncoding(int n) {
  if (n < 1 || n > kMaxLayers) throw ValidationError("LayeredEncoding: n must lie in [1, 24]");
  for (int alpha = 0; alpha <= n; ++alpha) layers_.emplace_back(std::size_t{1} << alpha, 0);
}

LayeredEncoding::LayeredEncoding(std::vector<std::vector<std::uint8_t>> layers)
    : layers_(std::move(layers)) {
  if (layers_.size() < 2 || layers_.size() > kMaxLayers + 1) {
    throw ValidationError("LayeredEncoding: need between 2 and 25 layers");
  }
  for (std::size_t alpha = 0; alpha < layers_.size(); ++alpha) {
    if (layers_[alpha].size() != (std::size_t{1} << alpha)) {
      throw ValidationError("LayeredEncoding: layer " + std::to_string(alpha) +
                            " must hold 2^alpha bits");
    }
    for (auto v : layers_[alpha]) {
      if (v > 1) throw ValidationError("LayeredEncoding: entries must be bits");
    }
  }
}

void LayeredEncoding::redraw(SplitMix64& rng) {
  std::uint64_t word = 0;
  int left = 0;
  for (auto& layer : layers_) {
    for (auto& bit : layer) {
      if (left == 0) {
        word = rng.next();
        left = 64;
      }
      bit = static_cast<std::uint8_t>(word & 1u);
      word >>= 1;
      --left;
    }
  }
}

std::pair<int, int> LayeredEncoding::qubit_state(int alpha, std::size_t gamma) const {
  return qubit_state_with_key(alpha, gamma, bit(alpha, gamma));
}

std::pair<int, int> LayeredEncoding::qubit_state_with_key(int alpha, std::size_t gamma,
                                                          int key) const {
  if (alpha < 0 || alpha >= n() || gamma >= layers_[alpha].size()) {
    throw ValidationError("LayeredEncoding: qubit index out of range");
  }
  const auto& next = layers_[alpha + 1];
  return {next[2 * gamma] ^ key, next[2 * gamma + 1] ^ key};
}

// ------------------------------------------------------------------ simulate

RunReport simulate(const ProtocolConfig& config, std::span<const std::size_t> targets,
                   std::size_t threads) {
  config.validate();
  const std::size_t data_bits = std::size_t{1} << config.n;
  for (std::size_t t : targets) {
    if (t >= data_bits) throw ValidationError("vandam: target index out of range");
  }
  const auto start = std::chrono::steady_clock::now();

  const sqt::SqtParams params(config.tau);
  const OutcomeTable table = outcome_table(params);
  // The per-layer success (1 + tau')/2 must coincide with 1 - epsilon(tau).
  if (std::abs((1.0 + tau_prime(config.tau)) / 2.0 - (1.0 - sqt::epsilon_of_tau(config.tau))) >
      kExactTolerance) {
    throw ToleranceError("vandam: per-layer flip rate does not match tau'");
  }

  const std::uint64_t chunks = (config.trials + kChunkTrials - 1) / kChunkTrials;
  std::vector<std::vector<std::uint64_t>> chunk_successes(
      chunks, std::vector<std::uint64_t>(targets.size(), 0));
  parallel_for(chunks, threads, [&](std::size_t c) {
    SplitMix64 rng = SplitMix64::stream(config.seed, c);
    LayeredEncoding enc(config.n);
    const std::uint64_t begin = c * kChunkTrials;
    const std::uint64_t end = std::min(config.trials, begin + kChunkTrials);
    auto& successes = chunk_successes[c];
    for (std::uint64_t trial = begin; trial < end; ++trial) {
      enc.redraw(rng);
      for (std::size_t t = 0; t < targets.size(); ++t) {
        if (decode_once(enc, targets[t], table, rng)) ++successes[t];
      }
    }
  });

  RunReport report;
  report.config = config;
  report.p_exact = exact_success_probability(config.n, config.tau);
  report.jn_exact = jn_exact(config.n, config.tau);
  report.jn_lower_bound = gmplab::jn_lower_bound(config.tau, config.n);
  const double trials = static_cast<double>(config.trials);
  for (std::size_t t = 0; t < targets.size(); ++t) {
    TargetResult r;
    r.index = targets[t];
    for (const auto& chunk : chunk_successes) r.successes += chunk[t];
    r.frequency = static_cast<double>(r.successes) / trials;
    r.sigma = std::sqrt(report.p_exact * (1.0 - report.p_exact) / trials);
    report.targets.push_back(r);
  }
  report.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

double jn_exact(int n, double tau) {
  const double p = exact_success_probability(n, tau);
  return std::ldexp(binary_capacity(2.0 * p - 1.0), n);
}

Threshold violation_threshold(double tau) {
  if (!(tau > 0.0 && tau <= 1.0)) throw ValidationError("violation_threshold: tau must lie in (0, 1]");
  double last = 0.0;
  for (int n = 1; n <= kMaxLayers; ++n) {
    last = jn_exact(n, tau);
    if (last > 1.0) return {n, last};
  }
  throw ThresholdOverflowError("violation_threshold: J_n <= 1 for every n <= 24", last);
}

// --------------------------------------------------------------- decoupling

DecouplingReport decoupling_check(double tau, std::uint64_t seed, int n, int arrays) {
  const sqt::SqtParams params(tau);
  const HermitianOperator& sy = pauli::y();
  DecouplingReport report;

  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      const HermitianOperator rho = sqt::rho_kl(k, l, params).op();
      const HermitianOperator flipped = sandwich(sy, rho);
      report.mixing_error =
          std::max(report.mixing_error, max_abs_from_half_identity((rho + flipped) * 0.5));
      for (int t = 0; t < 2; ++t) {
        const HermitianOperator expected = sqt::rho_kl(k ^ t, l ^ t, params).op();
        const HermitianOperator& conjugated = t == 0 ? rho : flipped;
        report.covariance_error = std::max(
            report.covariance_error, max_abs_diff(conjugated.matrix(), expected.matrix()));
      }
    }
  }

  std::array<std::array<HermitianOperator, 2>, 2> states;
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) states[k][l] = sqt::rho_kl(k, l, params).op();
  }

  SplitMix64 rng = SplitMix64::stream(seed, 0);
  LayeredEncoding enc(n);
  for (int a = 0; a < arrays; ++a) {
    enc.redraw(rng);
    for (int alpha = 0; alpha < n; ++alpha) {
      for (std::size_t gamma = 0; gamma < enc.layer(alpha).size(); ++gamma) {
        const auto [k0, l0] = enc.qubit_state_with_key(alpha, gamma, 0);
        const auto [k1, l1] = enc.qubit_state_with_key(alpha, gamma, 1);
        const HermitianOperator averaged = (states[k0][l0] + states[k1][l1]) * 0.5;
        report.protocol_error = std::max(report.protocol_error, max_abs_from_half_identity(averaged));
      }
    }
  }

  // Whole register: fix the data layer, average the product state over every
  // assignment of the lower layers (M and the intermediate keys).
  const int reg_n = std::min(n, 2);
  const std::size_t key_bits = (std::size_t{1} << reg_n) - 1;
  SplitMix64 reg_rng = SplitMix64::stream(seed, 1);
  LayeredEncoding reg(reg_n);
  for (int a = 0; a < arrays; ++a) {
    reg.redraw(reg_rng);
    std::vector<std::vector<std::uint8_t>> layers;
    for (int alpha = 0; alpha <= reg_n; ++alpha) layers.push_back(reg.layer(alpha));
    ComplexMatrix sum;
    for (std::size_t assignment = 0; assignment < (std::size_t{1} << key_bits); ++assignment) {
      std::size_t bit = 0;
      for (int alpha = 0; alpha < reg_n; ++alpha) {
        for (auto& v : layers[alpha]) v = static_cast<std::uint8_t>((assignment >> bit++) & 1u);
      }
      const LayeredEncoding fixed(layers);
      HermitianOperator product;
      bool first = true;
      for (int alpha = 0; alpha < reg_n; ++alpha) {
        for (std::size_t gamma = 0; gamma < fixed.layer(alpha).size(); ++gamma) {
          const auto [k, l] = fixed.qubit_state(alpha, gamma);
          product = first ? states[k][l] : tensor(product, states[k][l]);
          first = false;
        }
      }
      if (sum.dim() == 0) sum = ComplexMatrix(product.dim());
      sum += product.matrix();
    }
    sum *= Complex(1.0 / static_cast<double>(std::size_t{1} << key_bits));
    const double scale = 1.0 / static_cast<double>(sum.dim());
    report.register_error = std::max(
        report.register_error,
        max_abs_diff(sum, ComplexMatrix::identity(sum.dim()) * Complex(scale)));
  }

  report.holds = report.mixing_error <= 1e-12 && report.covariance_error <= 1e-12 &&
                 report.protocol_error <= 1e-12 && report.register_error <= 1e-12;
  return report;
}

}  // namespace gmplab::vandam
