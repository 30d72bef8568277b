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

#include "qbcap/linalg.hpp"

namespace qbcap {

/// Correlation coefficients (c1, c2, c3) of the Bell-diagonal state
/// (1/4)(I⊗I + Σ c_i σ_i⊗σ_i).
struct BellCoefficients {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  std::array<double, 3> as_array() const { return {c1, c2, c3}; }
  double operator[](int i) const { return i == 0 ? c1 : (i == 1 ? c2 : c3); }

  friend bool operator==(const BellCoefficients&, const BellCoefficients&) = default;
};

/// A state is accepted as physical when every eigenvalue is >= -kPhysicalTolerance.
inline constexpr double kPhysicalTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-12;
/// Off-pattern entries larger than this mean the state is not Bell-diagonal.
inline constexpr double kBellPatternTolerance = 1e-10;

/// Closed-form spectrum (λ0, λ1, λ2, λ3) in that order, no sorting, no
/// clamping. Does not validate.
std::array<double, 4> bell_spectrum_unchecked(const BellCoefficients& c);

/// Throws Unphysical naming the first λj below -1e-10.
void require_physical(const BellCoefficients& c);
bool is_physical(const BellCoefficients& c, double tol = kPhysicalTolerance);

/// (λ0, λ1, λ2, λ3); throws Unphysical.
std::array<double, 4> bell_spectrum(const BellCoefficients& c);

/// Inverse of the λ formulas: c_i = 1 - 2(λ0 + λ_i).
BellCoefficients coefficients_from_spectrum(const std::array<double, 4>& lambda);

/// A 4x4 two-qubit density operator in the basis |00>,|01>,|10>,|11>.
class TwoQubitState {
 public:
  /// Validates Hermiticity (1e-10), unit trace (1e-12) and positivity
  /// (min eigenvalue >= -1e-10); throws Unphysical otherwise.
  explicit TwoQubitState(ComplexMatrix m);

  /// Skips validation. For outputs of trace-preserving completely positive
  /// maps applied to valid states.
  static TwoQubitState trusted(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return m_; }

 private:
  struct TrustedTag {};
  TwoQubitState(ComplexMatrix m, TrustedTag) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

TwoQubitState bell_density(const BellCoefficients& c);

/// c_i = tr(ρ σ_i⊗σ_i). Throws NotBellDiagonal unless ρ has the Bell-diagonal
/// pattern: zeros off the diagonal and anti-diagonal, ρ00 = ρ33,
/// ρ11 = ρ22, real anti-diagonal, symmetric anti-diagonal (all within 1e-10).
BellCoefficients extract_coefficients(const TwoQubitState& rho);

/// Reduced states; the first factor is qubit A.
ComplexMatrix partial_trace_a(const ComplexMatrix& m);
ComplexMatrix partial_trace_b(const ComplexMatrix& m);

/// H = εA σ3⊗I + εB I⊗σ3 with εA >= εB >= 0.
class BatteryHamiltonian {
 public:
  /// Throws InvalidHamiltonian unless epsA >= epsB >= 0.
  BatteryHamiltonian(double eps_a, double eps_b);

  double eps_a() const { return eps_a_; }
  double eps_b() const { return eps_b_; }

  ComplexMatrix matrix() const;
  /// (-εA-εB, -εA+εB, εA-εB, εA+εB).
  std::array<double, 4> eigenenergies_ascending() const;

 private:
  double eps_a_;
  double eps_b_;
};

}  // namespace qbcap
