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

#include "gmplab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gmplab/error.hpp"

namespace gmplab {

namespace {

constexpr double kJacobiOffTolerance = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw ValidationError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
  }
}

double off_diagonal_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (i != j) sum += std::norm(m(i, j));
    }
  }
  return std::sqrt(sum);
}

double frobenius_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (const auto& v : m.entries()) sum += std::norm(v);
  return std::sqrt(sum);
}

// One unitary rotation in the (p, q) plane that zeroes a(p, q). The phase of
// a(p, q) is absorbed first, then a real Jacobi rotation finishes the job.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const Complex phase = apq / g;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double zeta = (aqq - app) / (2.0 * g);
  const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex phase_conj = std::conj(phase);

  // U = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] acting on columns p, q.
  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * phase_conj * akq;
    a(k, q) = s * akp + c * phase_conj * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * apk + c * phase * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * phase_conj * vkq;
    v(k, q) = s * vkp + c * phase_conj * vkq;
  }
}

}  // namespace

// ---------------------------------------------------------------- ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw ValidationError("ComplexMatrix: expected " + std::to_string(dim_ * dim_) +
                          " entries, got " + std::to_string(entries_.size()));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket) {
  ComplexMatrix m(ket.size());
  for (std::size_t i = 0; i < ket.size(); ++i) {
    for (std::size_t j = 0; j < ket.size(); ++j) m(i, j) = ket[i] * std::conj(ket[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : entries_) m = std::max(m, std::abs(v));
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(dim_, other.dim_, "matrix addition");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(dim_, other.dim_, "matrix subtraction");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& v : entries_) v *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix product");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
      }
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return m;
}

// ------------------------------------------------------------ HermitianOperator

HermitianOperator::HermitianOperator(ComplexMatrix matrix)
    : HermitianOperator(std::move(matrix), {}) {}

HermitianOperator::HermitianOperator(ComplexMatrix matrix, std::vector<std::size_t> subsystem_dims)
    : matrix_(std::move(matrix)), subsystem_dims_(std::move(subsystem_dims)) {
  if (matrix_.dim() == 0) throw ValidationError("HermitianOperator: empty matrix");
  if (subsystem_dims_.empty()) subsystem_dims_ = {matrix_.dim()};
  if (std::find(subsystem_dims_.begin(), subsystem_dims_.end(), 0u) != subsystem_dims_.end() ||
      product(subsystem_dims_) != matrix_.dim()) {
    throw ValidationError("HermitianOperator: subsystem dims do not multiply to " +
                          std::to_string(matrix_.dim()));
  }
  const double tol = kHermitianTolerance * std::max(1.0, matrix_.max_abs());
  const std::size_t n = matrix_.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Complex a = matrix_(i, j);
      const Complex b = std::conj(matrix_(j, i));
      if (std::abs(a - b) > tol) {
        throw ValidationError("HermitianOperator: matrix is not Hermitian at (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
      }
      const Complex avg = 0.5 * (a + b);
      matrix_(i, j) = avg;
      matrix_(j, i) = std::conj(avg);
    }
  }
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
  return HermitianOperator(ComplexMatrix::identity(dim));
}

HermitianOperator HermitianOperator::zero(std::size_t dim) {
  return HermitianOperator(ComplexMatrix(dim));
}

HermitianOperator HermitianOperator::projector(std::span<const Complex> ket) {
  return HermitianOperator(ComplexMatrix::outer(ket));
}

HermitianOperator HermitianOperator::diagonal(std::span<const double> values) {
  return HermitianOperator(ComplexMatrix::diagonal(values));
}

HermitianOperator HermitianOperator::with_subsystems(std::vector<std::size_t> dims) const {
  return HermitianOperator(matrix_, std::move(dims));
}

double HermitianOperator::expectation(const HermitianOperator& other) const {
  require_same_dim(dim(), other.dim(), "expectation");
  const std::size_t n = dim();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sum += (matrix_(i, j) * other.matrix_(j, i)).real();
  }
  return sum;
}

double HermitianOperator::expectation(std::span<const Complex> ket) const {
  require_same_dim(dim(), ket.size(), "expectation");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < ket.size(); ++i) {
    for (std::size_t j = 0; j < ket.size(); ++j) sum += std::conj(ket[i]) * matrix_(i, j) * ket[j];
  }
  return sum.real();
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& other) {
  matrix_ += other.matrix_;
  return *this;
}

HermitianOperator& HermitianOperator::operator-=(const HermitianOperator& other) {
  matrix_ -= other.matrix_;
  return *this;
}

HermitianOperator& HermitianOperator::operator*=(double scale) {
  matrix_ *= scale;
  return *this;
}

HermitianOperator sandwich(const ComplexMatrix& a, const HermitianOperator& h) {
  ComplexMatrix product = a * h.matrix() * a.adjoint();
  // Rounding can leave asymmetry far below the Hermitian tolerance; the
  // constructor averages it away.
  return HermitianOperator(std::move(product), h.subsystem_dims());
}

ComplexMatrix Spectrum::reconstruct() const {
  const std::size_t n = eigenvectors.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        sum += eigenvectors(i, k) * eigenvalues[k] * std::conj(eigenvectors(j, k));
      }
      out(i, j) = sum;
    }
  }
  return out;
}

namespace pauli {

const HermitianOperator& x() {
  static const HermitianOperator op(ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}));
  return op;
}

const HermitianOperator& y() {
  static const HermitianOperator op(
      ComplexMatrix(2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}));
  return op;
}

const HermitianOperator& z() {
  static const HermitianOperator op(ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}));
  return op;
}

}  // namespace pauli

std::vector<Complex> basis_ket(std::size_t dim, std::size_t index) {
  if (index >= dim) throw ValidationError("basis_ket: index out of range");
  std::vector<Complex> ket(dim);
  ket[index] = 1.0;
  return ket;
}

// ------------------------------------------------------------------- operations

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b) {
  std::vector<std::size_t> dims = a.subsystem_dims();
  dims.insert(dims.end(), b.subsystem_dims().begin(), b.subsystem_dims().end());
  return HermitianOperator(kron(a.matrix(), b.matrix()), std::move(dims));
}

HermitianOperator partial_trace(const HermitianOperator& m, std::span<const std::size_t> keep) {
  const auto& dims = m.subsystem_dims();
  const std::size_t parts = dims.size();
  std::vector<bool> kept(parts, false);
  for (std::size_t k : keep) {
    if (k >= parts) {
      throw ValidationError("partial_trace: subsystem index " + std::to_string(k) +
                            " out of range (have " + std::to_string(parts) + ")");
    }
    kept[k] = true;
  }

  std::vector<std::size_t> kept_dims;
  for (std::size_t s = 0; s < parts; ++s) {
    if (kept[s]) kept_dims.push_back(dims[s]);
  }
  if (kept_dims.empty()) kept_dims.push_back(1);

  // Split each full index into its kept and traced mixed-radix parts.
  const std::size_t n = m.dim();
  std::vector<std::size_t> kept_index(n);
  std::vector<std::size_t> traced_index(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rest = i;
    std::size_t k_idx = 0, k_stride = 1, t_idx = 0, t_stride = 1;
    for (std::size_t s = parts; s-- > 0;) {
      const std::size_t digit = rest % dims[s];
      rest /= dims[s];
      if (kept[s]) {
        k_idx += digit * k_stride;
        k_stride *= dims[s];
      } else {
        t_idx += digit * t_stride;
        t_stride *= dims[s];
      }
    }
    kept_index[i] = k_idx;
    traced_index[i] = t_idx;
  }

  ComplexMatrix out(product(kept_dims));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (traced_index[i] == traced_index[j]) out(kept_index[i], kept_index[j]) += m(i, j);
    }
  }
  return HermitianOperator(std::move(out), std::move(kept_dims));
}

Spectrum eigh(const HermitianOperator& m) {
  ComplexMatrix a = m.matrix();
  const std::size_t n = a.dim();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = kJacobiOffTolerance * std::max(1.0, frobenius_norm(a));
  for (int sweep = 0; sweep < kJacobiMaxSweeps && off_diagonal_norm(a) >= threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }
  }
  if (off_diagonal_norm(a) >= threshold) {
    throw ToleranceError("eigh: Jacobi iteration did not converge");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });
  Spectrum spectrum;
  spectrum.eigenvalues.resize(n);
  spectrum.eigenvectors = ComplexMatrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    spectrum.eigenvalues[c] = a(order[c], order[c]).real();
    for (std::size_t r = 0; r < n; ++r) spectrum.eigenvectors(r, c) = v(r, order[c]);
  }
  return spectrum;
}

Spectrum eigh(const ComplexMatrix& m) { return eigh(HermitianOperator(m)); }

double min_eigenvalue(const HermitianOperator& m) { return eigh(m).eigenvalues.back(); }

double trace_norm(const HermitianOperator& m) {
  double sum = 0.0;
  for (double lambda : eigh(m).eigenvalues) sum += std::abs(lambda);
  return sum;
}

double trace_distance(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a.dim(), b.dim(), "trace_distance");
  return 0.5 * trace_norm(a - b);
}

HermitianOperator psd_sqrt(const HermitianOperator& m) {
  Spectrum s = eigh(m);
  for (double& lambda : s.eigenvalues) {
    if (lambda < -kPsdClip) {
      throw NotPsdError("psd_sqrt: eigenvalue " + std::to_string(lambda) + " below -1e-10");
    }
    lambda = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
  }
  return HermitianOperator(s.reconstruct(), m.subsystem_dims());
}

bool is_psd(const HermitianOperator& m, double tolerance) {
  return min_eigenvalue(m) >= -tolerance;
}

}  // namespace gmplab
