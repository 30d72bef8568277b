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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbcap/linalg.hpp"
#include "qbcap/model.hpp"

namespace qbcap {

enum class ChannelKind {
  BitFlip,
  PhaseFlip,
  BitPhaseFlip,
  Depolarizing,
  // Fixed mixing probability 1/2, damping strength given by p.
  GeneralizedAmplitudeDamping,
  AmplitudeDamping,
};

enum class Sides { One, Two };

inline constexpr std::array<ChannelKind, 6> kAllChannels = {
    ChannelKind::BitFlip,      ChannelKind::PhaseFlip,
    ChannelKind::BitPhaseFlip, ChannelKind::Depolarizing,
    ChannelKind::GeneralizedAmplitudeDamping, ChannelKind::AmplitudeDamping};

/// Kinds whose output stays Bell-diagonal (everything except adc).
inline constexpr std::array<ChannelKind, 5> kBellPreservingChannels = {
    ChannelKind::BitFlip, ChannelKind::PhaseFlip, ChannelKind::BitPhaseFlip,
    ChannelKind::Depolarizing, ChannelKind::GeneralizedAmplitudeDamping};

/// Kinds admitted on both qubits.
inline constexpr std::array<ChannelKind, 3> kTwoSidedChannels = {
    ChannelKind::BitFlip, ChannelKind::PhaseFlip, ChannelKind::BitPhaseFlip};

/// "bf", "pf", "bpf", "dep", "gad", "adc".
std::string_view short_name(ChannelKind kind);
std::optional<ChannelKind> parse_channel(std::string_view name);
std::string_view to_string(Sides sides);
std::optional<Sides> parse_sides(std::string_view name);

bool preserves_bell_form(ChannelKind kind);
bool supports_two_sided(ChannelKind kind);

inline constexpr double kCompletenessTolerance = 1e-12;

struct KrausSet {
  std::vector<ComplexMatrix> operators;
  std::string label;
  std::map<std::string, double> parameters;

  /// Σ E_k† E_k.
  ComplexMatrix completeness_sum() const;
  /// Largest entrywise deviation of Σ E_k† E_k from the identity.
  double completeness_error() const;
  bool is_complete(double tol = kCompletenessTolerance) const;
};

/// The standard qubit Kraus operators for each kind:
///   bf/pf/bpf: √(1-p/2) I, √(p/2) σ
///   dep:       √(1-p) I, √(p/3) σ1, √(p/3) σ2, √(p/3) σ3
///   gad:       generalized_amplitude_damping(1/2, p)
///   adc:       diag(1, √(1-p)), √p |0><1|
/// Throws ParameterOutOfRange unless p ∈ [0, 1].
KrausSet kraus_set(ChannelKind kind, double p);

/// Generalized amplitude damping with mixing probability `mixing` and
/// damping strength `gamma`.
KrausSet generalized_amplitude_damping(double mixing, double gamma);

/// Kraus set of one single pass on qubit A, consistent with coeff_map.
///
/// The single-pass coefficient maps for bf, pf, bpf and gad equal the
/// standard operators at exposure 1 - (1-p)^2 (the same channel applied to
/// both qubits of a Bell-diagonal state at strength p); dep and adc use
/// kraus_set(kind, p) unchanged.
KrausSet one_sided_pass(ChannelKind kind, double p);

/// Σ_k (E_k⊗I) ρ (E_k⊗I)†.
TwoQubitState apply_one_sided(const TwoQubitState& rho, const KrausSet& k);
/// Σ_ij (E_i⊗F_j) ρ (E_i⊗F_j)†.
TwoQubitState apply_two_sided(const TwoQubitState& rho, const KrausSet& ka, const KrausSet& kb);
/// n-fold composition of apply_one_sided; n >= 1.
TwoQubitState apply_n_times(const TwoQubitState& rho, const KrausSet& k, unsigned n);
/// n-fold composition of apply_two_sided; n >= 1.
TwoQubitState apply_n_times(const TwoQubitState& rho, const KrausSet& ka, const KrausSet& kb,
                            unsigned n);

/// base^n by repeated squaring.
double ipow(double base, unsigned n);

/// Closed-form coefficient map after n passes.
///
/// One-sided rows: bf (c1, c2 x², c3 x²), pf (c1 x², c2 x², c3),
/// bpf (c1 x², c2, c3 x²), dep c·(1-4p/3)^n, gad (c1 x, c2 x, c3 x²) with
/// x = (1-p)^n. Two-sided rows (bf, pf, bpf) scale the same two coefficients
/// by ((1-p)(1-q))^n.
///
/// Throws UnsupportedCombination for adc, two-sided dep/gad, or a q given
/// (or missing) inconsistently with `sides`; ParameterOutOfRange for
/// p, q outside [0, 1] or n == 0.
BellCoefficients coeff_map(ChannelKind kind, const BellCoefficients& c, double p,
                           std::optional<double> q, unsigned n, Sides sides);

/// Eigenvalues (u0, u1, u2, u3) of the n-pass amplitude-damping output and
/// their pairwise gaps, evaluated without cancellation so orderings remain
/// decidable when (1-p)^n falls below machine epsilon.
struct AdcSpectrum {
  std::array<double, 4> u{};
  double u2_minus_u0 = 0.0;
  double u3_minus_u2 = 0.0;
  double u1_minus_u3 = 0.0;
  double u1_minus_u2 = 0.0;
  double u1_minus_u0 = 0.0;

  /// u0 <= u2 <= u3 <= u1 (strict when `strict`).
  bool ordered_0231(bool strict = false) const;
  /// u0 <= u2 <= u1 <= u3 (strict when `strict`).
  bool ordered_0213(bool strict = false) const;
};

/// The amplitude-damping output after n passes on qubit A (closed form).
TwoQubitState adc_output(const BellCoefficients& c, double p, unsigned n);
AdcSpectrum adc_spectrum(const BellCoefficients& c, double p, unsigned n);

}  // namespace qbcap
