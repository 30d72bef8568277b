// Copyright 2026 The qbcap Authors
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

#include "qbcap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qbcap/errors.hpp"

namespace qbcap {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("ComplexMatrix: expected " + std::to_string(rows_ * cols_) +
                                " entries, got " + std::to_string(entries_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::initializer_list<Complex> entries)
    : ComplexMatrix(rows, cols, std::vector<Complex>(entries)) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: matrix is not square");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) m = std::max(m, std::abs(ea[i] - eb[i]));
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex s = a(ar, ac);
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
    }
  return out;
}

namespace {

constexpr std::size_t kDim = 4;
constexpr int kMaxSweeps = 100;
constexpr double kResidualTarget = 1e-13;

double off_diagonal_norm(const std::array<std::array<Complex, kDim>, kDim>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      if (i != j) s += std::norm(a[i][j]);
  return std::sqrt(s);
}

// Zeroes a[p][q] with the unitary G = diag-phase * real rotation, a <- G^H a G.
void rotate(std::array<std::array<Complex, kDim>, kDim>& a, std::size_t p, std::size_t q) {
  const double g = std::abs(a[p][q]);
  if (g == 0.0) return;
  const Complex phase = a[p][q] / g;
  const double app = a[p][p].real();
  const double aqq = a[q][q].real();
  const double theta = (aqq - app) / (2.0 * g);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  // Columns p and q of G.
  const Complex gpp = c;
  const Complex gqp = -s * std::conj(phase);
  const Complex gpq = s;
  const Complex gqq = c * std::conj(phase);

  // a <- a G (columns p, q)
  for (std::size_t k = 0; k < kDim; ++k) {
    const Complex akp = a[k][p];
    const Complex akq = a[k][q];
    a[k][p] = akp * gpp + akq * gqp;
    a[k][q] = akp * gpq + akq * gqq;
  }
  // a <- G^H a (rows p, q)
  for (std::size_t k = 0; k < kDim; ++k) {
    const Complex apk = a[p][k];
    const Complex aqk = a[q][k];
    a[p][k] = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a[q][k] = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a[p][q] = 0.0;
  a[q][p] = 0.0;
  a[p][p] = a[p][p].real();
  a[q][q] = a[q][q].real();
}

}  // namespace

std::array<double, 4> hermitian_eigenvalues_ascending(const ComplexMatrix& m) {
  if (m.rows() != kDim || m.cols() != kDim)
    throw NotHermitian("hermitian_eigenvalues_ascending: expected a 4x4 matrix");
  if (!m.is_hermitian(kHermitianTolerance))
    throw NotHermitian("hermitian_eigenvalues_ascending: matrix is not Hermitian within 1e-10");

  // Symmetrize so the rotations act on an exactly Hermitian matrix.
  std::array<std::array<Complex, kDim>, kDim> a{};
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) a[i][j] = 0.5 * (m(i, j) + std::conj(m(j, i)));

  const double target = kResidualTarget * std::max(1.0, m.frobenius_norm());
  bool converged = off_diagonal_norm(a) <= target;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < kDim; ++p)
      for (std::size_t q = p + 1; q < kDim; ++q) rotate(a, p, q);
    converged = off_diagonal_norm(a) <= target;
  }
  if (!converged)
    throw NoConvergence("hermitian_eigenvalues_ascending: no convergence after 100 sweeps");

  std::array<double, 4> ev{};
  for (std::size_t i = 0; i < kDim; ++i) ev[i] = a[i][i].real();
  std::stable_sort(ev.begin(), ev.end());
  return ev;
}

namespace pauli {

const ComplexMatrix& identity() {
  static const ComplexMatrix m = ComplexMatrix::identity(2);
  return m;
}

const ComplexMatrix& sigma1() {
  static const ComplexMatrix m(2, 2, {0.0, 1.0, 1.0, 0.0});
  return m;
}

const ComplexMatrix& sigma2() {
  static const ComplexMatrix m(2, 2, {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0});
  return m;
}

const ComplexMatrix& sigma3() {
  static const ComplexMatrix m(2, 2, {1.0, 0.0, 0.0, -1.0});
  return m;
}

const ComplexMatrix& sigma(int i) {
  switch (i) {
    case 0: return identity();
    case 1: return sigma1();
    case 2: return sigma2();
    case 3: return sigma3();
    default: throw std::out_of_range("pauli::sigma: index must be 0..3");
  }
}

}  // namespace pauli

}  // namespace qbcap
