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
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gmplab/random.hpp"

namespace gmplab::vandam {

inline constexpr int kMaxLayers = 24;

struct ProtocolConfig {
  int n = 1;                 // layers; N = 2^n data bits
  double tau = 0.0;
  std::uint64_t trials = 1;  // Monte Carlo samples per target
  std::uint64_t seed = 0;

  /// Throws ValidationError unless 1 <= n <= 24, tau in [0, 1] and trials >= 1.
  void validate() const;
};

/// (1 + (sqrt2 - 1) tau) / sqrt2.
double tau_prime(double tau);

/// (1 + tau'^n) / 2.
double success_probability_closed_form(int n, double tau);
/// Layer-by-layer propagation of the guess-correct probability, with the
/// per-layer success taken from the qubit statistics 1 - epsilon(tau).
double success_probability_recursion(int n, double tau);
/// Both routes; throws ToleranceError if they differ by more than 1e-12.
double exact_success_probability(int n, double tau);

/// Bit arrays x_alpha of length 2^alpha for alpha = 0..n. Layer 0 is the
/// one-bit message M and layer n the data. Qubit (alpha, gamma) carries
/// rho_{x_{alpha+1,2gamma} ^ x_{alpha,gamma}, x_{alpha+1,2gamma+1} ^ x_{alpha,gamma}}.
class LayeredEncoding {
 public:
  explicit LayeredEncoding(int n);
  explicit LayeredEncoding(std::vector<std::vector<std::uint8_t>> layers);

  /// Redraws every layer uniformly.
  void redraw(SplitMix64& rng);

  int n() const noexcept { return static_cast<int>(layers_.size()) - 1; }
  std::uint8_t bit(int alpha, std::size_t gamma) const { return layers_[alpha][gamma]; }
  const std::vector<std::uint8_t>& layer(int alpha) const { return layers_[alpha]; }
  const std::vector<std::uint8_t>& data() const { return layers_.back(); }
  /// (k, l) of the state held by qubit (alpha, gamma), alpha in [0, n).
  std::pair<int, int> qubit_state(int alpha, std::size_t gamma) const;
  /// Same, with the encryption bit x_{alpha,gamma} replaced by `key`.
  std::pair<int, int> qubit_state_with_key(int alpha, std::size_t gamma, int key) const;

 private:
  std::vector<std::vector<std::uint8_t>> layers_;
};

struct TargetResult {
  std::size_t index = 0;
  std::uint64_t successes = 0;
  double frequency = 0.0;
  double sigma = 0.0;  // sqrt(P (1 - P) / trials)
};

struct RunReport {
  ProtocolConfig config;
  std::string rng = SplitMix64::kName;
  std::vector<TargetResult> targets;
  double p_exact = 0.0;
  double jn_exact = 0.0;
  double jn_lower_bound = 0.0;
  double wall_clock_seconds = 0.0;
};

/// Monte Carlo run of the layered decoder. Trials are split into fixed-size
/// chunks with chunk c drawing from SplitMix64::stream(seed, c), so results do
/// not depend on `threads`.
RunReport simulate(const ProtocolConfig& config, std::span<const std::size_t> targets,
                   std::size_t threads = 1);

/// 2^n (1 - h(P)).
double jn_exact(int n, double tau);

struct Threshold {
  int n_star = 0;
  double jn_at_n_star = 0.0;
};

/// Smallest n <= 24 with jn_exact(n, tau) > 1; ThresholdOverflowError otherwise.
Threshold violation_threshold(double tau);

struct DecouplingReport {
  double mixing_error = 0.0;      // max | (rho_kl + sy rho_kl sy)/2 - I/2 |
  double covariance_error = 0.0;  // max | sy^t rho_kl sy^t - rho_{k^t, l^t} |
  double protocol_error = 0.0;    // per-qubit key-averaged state vs I/2
  double register_error = 0.0;    // whole register averaged over keys vs I/2^{N-1}
  bool holds = false;
};

/// Checks that the encrypted register carries no information about the data.
/// The protocol-level part draws `arrays` encodings of n layers; the
/// register-level part uses min(n, 2) layers.
DecouplingReport decoupling_check(double tau, std::uint64_t seed = 0, int n = 3, int arrays = 100);

}  // namespace gmplab::vandam
