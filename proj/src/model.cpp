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

#include "qbcap/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qbcap/errors.hpp"

namespace qbcap {

std::array<double, 4> bell_spectrum_unchecked(const BellCoefficients& c) {
  return {(1.0 - c.c1 - c.c2 - c.c3) / 4.0, (1.0 - c.c1 + c.c2 + c.c3) / 4.0,
          (1.0 + c.c1 - c.c2 + c.c3) / 4.0, (1.0 + c.c1 + c.c2 - c.c3) / 4.0};
}

void require_physical(const BellCoefficients& c) {
  const auto lambda = bell_spectrum_unchecked(c);
  for (int j = 0; j < 4; ++j) {
    if (lambda[j] < -kPhysicalTolerance || lambda[j] > 1.0 + kPhysicalTolerance) {
      std::ostringstream msg;
      msg << "unphysical Bell coefficients (" << c.c1 << ", " << c.c2 << ", " << c.c3
          << "): lambda" << j << " = " << lambda[j] << " lies outside [0, 1]";
      throw Unphysical(msg.str());
    }
  }
}

bool is_physical(const BellCoefficients& c, double tol) {
  const auto lambda = bell_spectrum_unchecked(c);
  return std::all_of(lambda.begin(), lambda.end(),
                     [tol](double l) { return l >= -tol && l <= 1.0 + tol; });
}

std::array<double, 4> bell_spectrum(const BellCoefficients& c) {
  require_physical(c);
  return bell_spectrum_unchecked(c);
}

BellCoefficients coefficients_from_spectrum(const std::array<double, 4>& lambda) {
  return {1.0 - 2.0 * (lambda[0] + lambda[1]), 1.0 - 2.0 * (lambda[0] + lambda[2]),
          1.0 - 2.0 * (lambda[0] + lambda[3])};
}

TwoQubitState::TwoQubitState(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != 4 || m_.cols() != 4) throw Unphysical("two-qubit state must be 4x4");
  if (!m_.is_hermitian(kHermitianTolerance)) throw Unphysical("density matrix is not Hermitian");
  const Complex tr = m_.trace();
  if (std::abs(tr.real() - 1.0) > kTraceTolerance || std::abs(tr.imag()) > kTraceTolerance)
    throw Unphysical("density matrix trace differs from 1");
  const auto ev = hermitian_eigenvalues_ascending(m_);
  if (ev[0] < -kPhysicalTolerance) {
    std::ostringstream msg;
    msg << "density matrix has negative eigenvalue " << ev[0];
    throw Unphysical(msg.str());
  }
}

TwoQubitState TwoQubitState::trusted(ComplexMatrix m) {
  return TwoQubitState(std::move(m), TrustedTag{});
}

TwoQubitState bell_density(const BellCoefficients& c) {
  require_physical(c);
  // Entrywise expansion of (1/4)(I⊗I + Σ c_i σ_i⊗σ_i).
  ComplexMatrix m(4, 4);
  m(0, 0) = m(3, 3) = (1.0 + c.c3) / 4.0;
  m(1, 1) = m(2, 2) = (1.0 - c.c3) / 4.0;
  m(0, 3) = m(3, 0) = (c.c1 - c.c2) / 4.0;
  m(1, 2) = m(2, 1) = (c.c1 + c.c2) / 4.0;
  return TwoQubitState::trusted(std::move(m));
}

BellCoefficients extract_coefficients(const TwoQubitState& rho) {
  const ComplexMatrix& m = rho.matrix();
  auto on_pattern = [](std::size_t r, std::size_t c) { return r == c || r + c == 3; };
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (!on_pattern(r, c) && std::abs(m(r, c)) > kBellPatternTolerance)
        throw NotBellDiagonal("state has weight outside the Bell-diagonal pattern");
  const double tol = kBellPatternTolerance;
  if (std::abs(m(0, 0) - m(3, 3)) > tol || std::abs(m(1, 1) - m(2, 2)) > tol)
    throw NotBellDiagonal("state diagonal is not of the form (a, b, b, a)");
  for (auto [r, c] : {std::pair{0, 3}, std::pair{1, 2}}) {
    if (std::abs(m(r, c).imag()) > tol || std::abs(m(r, c) - m(c, r)) > tol)
      throw NotBellDiagonal("state anti-diagonal is not real and symmetric");
  }
  BellCoefficients out;
  double* slots[] = {&out.c1, &out.c2, &out.c3};
  for (int i = 1; i <= 3; ++i) {
    const ComplexMatrix ss = kron(pauli::sigma(i), pauli::sigma(i));
    *slots[i - 1] = (m * ss).trace().real();
  }
  return out;
}

ComplexMatrix partial_trace_a(const ComplexMatrix& m) {
  ComplexMatrix out(2, 2);
  for (std::size_t b1 = 0; b1 < 2; ++b1)
    for (std::size_t b2 = 0; b2 < 2; ++b2)
      for (std::size_t a = 0; a < 2; ++a) out(b1, b2) += m(2 * a + b1, 2 * a + b2);
  return out;
}

ComplexMatrix partial_trace_b(const ComplexMatrix& m) {
  ComplexMatrix out(2, 2);
  for (std::size_t a1 = 0; a1 < 2; ++a1)
    for (std::size_t a2 = 0; a2 < 2; ++a2)
      for (std::size_t b = 0; b < 2; ++b) out(a1, a2) += m(2 * a1 + b, 2 * a2 + b);
  return out;
}

BatteryHamiltonian::BatteryHamiltonian(double eps_a, double eps_b) : eps_a_(eps_a), eps_b_(eps_b) {
  if (!(eps_a >= eps_b && eps_b >= 0.0)) {
    std::ostringstream msg;
    msg << "battery Hamiltonian requires epsA >= epsB >= 0, got epsA = " << eps_a
        << ", epsB = " << eps_b;
    throw InvalidHamiltonian(msg.str());
  }
}

ComplexMatrix BatteryHamiltonian::matrix() const {
  return eps_a_ * kron(pauli::sigma3(), pauli::identity()) +
         eps_b_ * kron(pauli::identity(), pauli::sigma3());
}

std::array<double, 4> BatteryHamiltonian::eigenenergies_ascending() const {
  return {-eps_a_ - eps_b_, -eps_a_ + eps_b_, eps_a_ - eps_b_, eps_a_ + eps_b_};
}

}  // namespace qbcap
