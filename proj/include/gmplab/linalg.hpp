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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gmplab {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |v><v| for an arbitrary (not necessarily normalized) ket.
  static ComplexMatrix outer(std::span<const Complex> ket);

  std::size_t dim() const noexcept { return dim_; }
  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  std::span<const Complex> entries() const noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

inline constexpr double kHermitianTolerance = 1e-12;

/// Hermitian matrix with a tensor-factor layout. The stored matrix is exactly
/// Hermitian: construction checks symmetry and then averages M with M^dagger.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(ComplexMatrix matrix);
  HermitianOperator(ComplexMatrix matrix, std::vector<std::size_t> subsystem_dims);

  static HermitianOperator identity(std::size_t dim);
  static HermitianOperator zero(std::size_t dim);
  static HermitianOperator projector(std::span<const Complex> ket);
  static HermitianOperator diagonal(std::span<const double> values);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  const std::vector<std::size_t>& subsystem_dims() const noexcept { return subsystem_dims_; }
  HermitianOperator with_subsystems(std::vector<std::size_t> dims) const;

  double operator()(std::size_t i) const { return matrix_(i, i).real(); }
  const Complex& operator()(std::size_t row, std::size_t col) const { return matrix_(row, col); }

  double trace() const { return matrix_.trace().real(); }
  /// Re Tr[this * other].
  double expectation(const HermitianOperator& other) const;
  /// <v| this |v>.
  double expectation(std::span<const Complex> ket) const;

  HermitianOperator& operator+=(const HermitianOperator& other);
  HermitianOperator& operator-=(const HermitianOperator& other);
  HermitianOperator& operator*=(double scale);

  friend HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) {
    return a += b;
  }
  friend HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b) {
    return a -= b;
  }
  friend HermitianOperator operator*(HermitianOperator a, double s) { return a *= s; }
  friend HermitianOperator operator*(double s, HermitianOperator a) { return a *= s; }

 private:
  ComplexMatrix matrix_;
  std::vector<std::size_t> subsystem_dims_;
};

/// a * h * a^dagger; the subsystem layout of h is kept.
HermitianOperator sandwich(const ComplexMatrix& a, const HermitianOperator& h);
inline HermitianOperator sandwich(const HermitianOperator& a, const HermitianOperator& h) {
  return sandwich(a.matrix(), h);
}

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // columns

  ComplexMatrix reconstruct() const;
};

namespace pauli {
const HermitianOperator& x();
const HermitianOperator& y();
const HermitianOperator& z();
}  // namespace pauli

/// Computational basis ket |index> in dimension dim.
std::vector<Complex> basis_ket(std::size_t dim, std::size_t index);

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);

/// Traces out every subsystem not listed in keep. Kept factors stay in their
/// original order.
HermitianOperator partial_trace(const HermitianOperator& m, std::span<const std::size_t> keep);
inline HermitianOperator partial_trace(const HermitianOperator& m,
                                       std::initializer_list<std::size_t> keep) {
  return partial_trace(m, std::span<const std::size_t>(keep.begin(), keep.size()));
}

/// Cyclic complex Jacobi. Eigenvalues come back in descending order.
Spectrum eigh(const HermitianOperator& m);
/// Validates Hermitian symmetry first.
Spectrum eigh(const ComplexMatrix& m);

double min_eigenvalue(const HermitianOperator& m);
double trace_norm(const HermitianOperator& m);
double trace_distance(const HermitianOperator& a, const HermitianOperator& b);

inline constexpr double kPsdClip = 1e-10;

/// Principal square root. Eigenvalues in [-1e-10, 0) are clipped to zero;
/// anything more negative raises NotPsdError.
HermitianOperator psd_sqrt(const HermitianOperator& m);

/// True when the minimum eigenvalue is >= -tolerance.
bool is_psd(const HermitianOperator& m, double tolerance = kPsdClip);

}  // namespace gmplab
