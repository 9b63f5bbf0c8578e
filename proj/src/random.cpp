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

#include "gmplab/random.hpp"

#include <cmath>
#include <numbers>

#include "gmplab/error.hpp"

namespace gmplab {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

ComplexMatrix gaussian_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
  // Stored in a square container of size max(rows, cols); unused columns stay zero.
  ComplexMatrix g(std::max(rows, cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  }
  return g;
}

}  // namespace

std::uint64_t SplitMix64::mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SplitMix64 SplitMix64::stream(std::uint64_t master, std::uint64_t index) noexcept {
  return SplitMix64(mix(master ^ mix((index + 1) * kGolden)));
}

std::uint64_t SplitMix64::next() noexcept {
  state_ += kGolden;
  return mix(state_);
}

double SplitMix64::uniform() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::normal() noexcept {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  if (bound == 0) return 0;
  const std::uint64_t limit = max() - max() % bound;
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return v % bound;
}

HermitianOperator random_hermitian(SplitMix64& rng, std::size_t dim) {
  ComplexMatrix g = gaussian_matrix(rng, dim, dim);
  return HermitianOperator((g + g.adjoint()) * Complex(0.5));
}

HermitianOperator random_density(SplitMix64& rng, std::size_t dim, std::size_t rank) {
  if (rank == 0 || rank > dim) rank = dim;
  ComplexMatrix g = gaussian_matrix(rng, dim, rank);
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  return HermitianOperator(std::move(rho));
}

HermitianOperator random_unit_trace_hermitian(SplitMix64& rng, std::size_t dim) {
  HermitianOperator h = random_hermitian(rng, dim);
  const double shift = (1.0 - h.trace()) / static_cast<double>(dim);
  return h + HermitianOperator::identity(dim) * shift;
}

std::vector<Complex> random_ket(SplitMix64& rng, std::size_t dim) {
  std::vector<Complex> ket(dim);
  double norm = 0.0;
  for (auto& v : ket) {
    v = Complex(rng.normal(), rng.normal());
    norm += std::norm(v);
  }
  for (auto& v : ket) v /= std::sqrt(norm);
  return ket;
}

HermitianOperator random_contraction(SplitMix64& rng, std::size_t dim) {
  Spectrum s = eigh(random_hermitian(rng, dim));
  for (double& lambda : s.eigenvalues) lambda = rng.uniform();
  return HermitianOperator(s.reconstruct());
}

std::vector<HermitianOperator> random_povm_effects(SplitMix64& rng, std::size_t dim,
                                                   std::size_t outcomes) {
  if (outcomes == 0) throw ValidationError("random_povm_effects: need at least one outcome");
  std::vector<HermitianOperator> raw;
  HermitianOperator total = HermitianOperator::zero(dim);
  for (std::size_t k = 0; k < outcomes; ++k) {
    ComplexMatrix g = gaussian_matrix(rng, dim, dim);
    raw.emplace_back(g * g.adjoint());
    total += raw.back();
  }
  Spectrum s = eigh(total);
  for (double& lambda : s.eigenvalues) lambda = 1.0 / std::sqrt(lambda);
  const ComplexMatrix inv_sqrt = s.reconstruct();
  std::vector<HermitianOperator> effects;
  effects.reserve(outcomes);
  for (const auto& g : raw) effects.push_back(sandwich(inv_sqrt, g));
  return effects;
}

HermitianOperator purify(const HermitianOperator& state) {
  const std::size_t d = state.dim();
  Spectrum s = eigh(state);
  std::vector<Complex> psi(d * d);
  for (std::size_t k = 0; k < d; ++k) {
    const double weight = std::sqrt(std::max(0.0, s.eigenvalues[k]));
    for (std::size_t a = 0; a < d; ++a) psi[a * d + k] += weight * s.eigenvectors(a, k);
  }
  return HermitianOperator(ComplexMatrix::outer(psi), {d, d});
}

}  // namespace gmplab
