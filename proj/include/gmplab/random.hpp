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
#include <limits>
#include <vector>

#include "gmplab/linalg.hpp"

namespace gmplab {

/// SplitMix64: a 64-bit counter-based generator. The state advances by the
/// golden-ratio increment and each output is a bijective mix of the counter,
/// so stream k of a master seed is reproducible from (seed, k) alone.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  static constexpr const char* kName = "splitmix64";

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  /// Independent substream for task `index` of a run seeded with `master`.
  static SplitMix64 stream(std::uint64_t master, std::uint64_t index) noexcept;

  static std::uint64_t mix(std::uint64_t z) noexcept;

  std::uint64_t next() noexcept;
  std::uint64_t operator()() noexcept { return next(); }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  /// Standard normal via Box-Muller.
  double normal() noexcept;
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Ginibre-style random Hermitian matrix (G + G^dagger)/2.
HermitianOperator random_hermitian(SplitMix64& rng, std::size_t dim);
/// Random density operator G G^dagger / Tr with G of the given column rank.
HermitianOperator random_density(SplitMix64& rng, std::size_t dim, std::size_t rank = 0);
/// Random unit-trace Hermitian (possibly indefinite).
HermitianOperator random_unit_trace_hermitian(SplitMix64& rng, std::size_t dim);
/// Random normalized ket.
std::vector<Complex> random_ket(SplitMix64& rng, std::size_t dim);
/// Random operator with 0 <= X <= I and eigenvalues uniform in [0, 1].
HermitianOperator random_contraction(SplitMix64& rng, std::size_t dim);
/// Random POVM effects: M_k = S^{-1/2} G_k S^{-1/2} with S the sum of random PSD G_k.
std::vector<HermitianOperator> random_povm_effects(SplitMix64& rng, std::size_t dim,
                                                   std::size_t outcomes);
/// Pure state on A (x) R (dims {d, d}) whose reduction to A is `state`.
HermitianOperator purify(const HermitianOperator& state);

}  // namespace gmplab
