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

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qbcap {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Sized for the 2x2 and 4x4 operators of a
/// two-qubit system but valid for any shape.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;

  /// max |M[i][j] - conj(M[j][i])| <= tol. False for non-square matrices.
  bool is_hermitian(double tol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex s);

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigenvalues of a 4x4 Hermitian matrix, sorted ascending.
///
/// Cyclic complex Jacobi rotations; converges when the off-diagonal
/// Frobenius norm drops below 1e-13 * max(1, ||m||_F). Throws NotHermitian
/// when the input fails is_hermitian(1e-10) or is not 4x4, NoConvergence
/// after 100 sweeps.
std::array<double, 4> hermitian_eigenvalues_ascending(const ComplexMatrix& m);

inline constexpr double kHermitianTolerance = 1e-10;

namespace pauli {
const ComplexMatrix& identity();
const ComplexMatrix& sigma1();
const ComplexMatrix& sigma2();
const ComplexMatrix& sigma3();
/// sigma(1..3); sigma(0) is the identity.
const ComplexMatrix& sigma(int i);
}  // namespace pauli

}  // namespace qbcap
