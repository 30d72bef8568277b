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

#include "qbcap/channels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qbcap/errors.hpp"

namespace qbcap {

std::string_view short_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::BitFlip: return "bf";
    case ChannelKind::PhaseFlip: return "pf";
    case ChannelKind::BitPhaseFlip: return "bpf";
    case ChannelKind::Depolarizing: return "dep";
    case ChannelKind::GeneralizedAmplitudeDamping: return "gad";
    case ChannelKind::AmplitudeDamping: return "adc";
  }
  return "?";
}

std::optional<ChannelKind> parse_channel(std::string_view name) {
  for (ChannelKind k : kAllChannels)
    if (short_name(k) == name) return k;
  return std::nullopt;
}

std::string_view to_string(Sides sides) { return sides == Sides::One ? "one" : "two"; }

std::optional<Sides> parse_sides(std::string_view name) {
  if (name == "one") return Sides::One;
  if (name == "two") return Sides::Two;
  return std::nullopt;
}

bool preserves_bell_form(ChannelKind kind) { return kind != ChannelKind::AmplitudeDamping; }

bool supports_two_sided(ChannelKind kind) {
  return std::find(kTwoSidedChannels.begin(), kTwoSidedChannels.end(), kind) !=
         kTwoSidedChannels.end();
}

ComplexMatrix KrausSet::completeness_sum() const {
  ComplexMatrix sum(2, 2);
  for (const auto& e : operators) sum += e.adjoint() * e;
  return sum;
}

double KrausSet::completeness_error() const {
  return max_abs_diff(completeness_sum(), pauli::identity());
}

bool KrausSet::is_complete(double tol) const { return completeness_error() <= tol; }

namespace {

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << "parameter " << name << " = " << p << " outside [0, 1]";
    throw ParameterOutOfRange(msg.str());
  }
}

KrausSet pauli_flip(ChannelKind kind, const ComplexMatrix& sigma, double p) {
  return {{std::sqrt(1.0 - p / 2.0) * pauli::identity(), std::sqrt(p / 2.0) * sigma},
          std::string(short_name(kind)),
          {{"p", p}}};
}

ComplexMatrix lifted(const ComplexMatrix& e) {
  if (e.rows() != 2 || e.cols() != 2)
    throw std::invalid_argument("Kraus operators must be 2x2");
  return e;
}

ComplexMatrix sandwich_sum(const ComplexMatrix& rho, const std::vector<ComplexMatrix>& ops) {
  ComplexMatrix out(4, 4);
  for (const auto& k : ops) out += k * rho * k.adjoint();
  return out;
}

std::vector<ComplexMatrix> one_sided_operators(const KrausSet& k) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(k.operators.size());
  for (const auto& e : k.operators) ops.push_back(kron(lifted(e), pauli::identity()));
  return ops;
}

std::vector<ComplexMatrix> two_sided_operators(const KrausSet& ka, const KrausSet& kb) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(ka.operators.size() * kb.operators.size());
  for (const auto& ea : ka.operators)
    for (const auto& eb : kb.operators) ops.push_back(kron(lifted(ea), lifted(eb)));
  return ops;
}

void require_passes(unsigned n) {
  if (n == 0) throw ParameterOutOfRange("number of channel passes must be >= 1");
}

}  // namespace

KrausSet generalized_amplitude_damping(double mixing, double gamma) {
  require_probability(mixing, "mixing");
  require_probability(gamma, "gamma");
  const double a = std::sqrt(mixing);
  const double b = std::sqrt(1.0 - mixing);
  const double damp = std::sqrt(1.0 - gamma);
  const double jump = std::sqrt(gamma);
  return {{ComplexMatrix(2, 2, {a, 0.0, 0.0, a * damp}),
           ComplexMatrix(2, 2, {0.0, a * jump, 0.0, 0.0}),
           ComplexMatrix(2, 2, {b * damp, 0.0, 0.0, b}),
           ComplexMatrix(2, 2, {0.0, 0.0, b * jump, 0.0})},
          "gad",
          {{"mixing", mixing}, {"gamma", gamma}}};
}

KrausSet kraus_set(ChannelKind kind, double p) {
  require_probability(p, "p");
  switch (kind) {
    case ChannelKind::BitFlip: return pauli_flip(kind, pauli::sigma1(), p);
    case ChannelKind::PhaseFlip: return pauli_flip(kind, pauli::sigma3(), p);
    case ChannelKind::BitPhaseFlip: return pauli_flip(kind, pauli::sigma2(), p);
    case ChannelKind::Depolarizing: {
      const double w = std::sqrt(p / 3.0);
      return {{std::sqrt(1.0 - p) * pauli::identity(), w * pauli::sigma1(), w * pauli::sigma2(),
               w * pauli::sigma3()},
              "dep",
              {{"p", p}}};
    }
    case ChannelKind::GeneralizedAmplitudeDamping: {
      KrausSet k = generalized_amplitude_damping(0.5, p);
      k.parameters["p"] = p;
      return k;
    }
    case ChannelKind::AmplitudeDamping:
      return {{ComplexMatrix(2, 2, {1.0, 0.0, 0.0, std::sqrt(1.0 - p)}),
               ComplexMatrix(2, 2, {0.0, std::sqrt(p), 0.0, 0.0})},
              "adc",
              {{"p", p}}};
  }
  throw std::invalid_argument("kraus_set: unknown channel kind");
}

KrausSet one_sided_pass(ChannelKind kind, double p) {
  require_probability(p, "p");
  switch (kind) {
    case ChannelKind::BitFlip:
    case ChannelKind::PhaseFlip:
    case ChannelKind::BitPhaseFlip:
    case ChannelKind::GeneralizedAmplitudeDamping: {
      const double exposure = p * (2.0 - p);
      KrausSet k = kraus_set(kind, exposure);
      k.parameters["p"] = p;
      k.parameters["exposure"] = exposure;
      return k;
    }
    case ChannelKind::Depolarizing:
    case ChannelKind::AmplitudeDamping:
      return kraus_set(kind, p);
  }
  throw std::invalid_argument("one_sided_pass: unknown channel kind");
}

TwoQubitState apply_one_sided(const TwoQubitState& rho, const KrausSet& k) {
  return TwoQubitState::trusted(sandwich_sum(rho.matrix(), one_sided_operators(k)));
}

TwoQubitState apply_two_sided(const TwoQubitState& rho, const KrausSet& ka, const KrausSet& kb) {
  return TwoQubitState::trusted(sandwich_sum(rho.matrix(), two_sided_operators(ka, kb)));
}

TwoQubitState apply_n_times(const TwoQubitState& rho, const KrausSet& k, unsigned n) {
  require_passes(n);
  const auto ops = one_sided_operators(k);
  ComplexMatrix m = rho.matrix();
  for (unsigned i = 0; i < n; ++i) m = sandwich_sum(m, ops);
  return TwoQubitState::trusted(std::move(m));
}

TwoQubitState apply_n_times(const TwoQubitState& rho, const KrausSet& ka, const KrausSet& kb,
                            unsigned n) {
  require_passes(n);
  const auto ops = two_sided_operators(ka, kb);
  ComplexMatrix m = rho.matrix();
  for (unsigned i = 0; i < n; ++i) m = sandwich_sum(m, ops);
  return TwoQubitState::trusted(std::move(m));
}

double ipow(double base, unsigned n) {
  double result = 1.0;
  while (n > 0) {
    if (n & 1U) result *= base;
    base *= base;
    n >>= 1U;
  }
  return result;
}

BellCoefficients coeff_map(ChannelKind kind, const BellCoefficients& c, double p,
                           std::optional<double> q, unsigned n, Sides sides) {
  require_probability(p, "p");
  require_passes(n);
  require_physical(c);

  if (sides == Sides::One) {
    if (q) throw UnsupportedCombination("coeff_map: q is only meaningful for two-sided channels");
    const double x = ipow(1.0 - p, n);
    const double x2 = ipow(1.0 - p, 2 * n);
    switch (kind) {
      case ChannelKind::BitFlip: return {c.c1, c.c2 * x2, c.c3 * x2};
      case ChannelKind::PhaseFlip: return {c.c1 * x2, c.c2 * x2, c.c3};
      case ChannelKind::BitPhaseFlip: return {c.c1 * x2, c.c2, c.c3 * x2};
      case ChannelKind::Depolarizing: {
        const double t = ipow(1.0 - 4.0 * p / 3.0, n);
        return {c.c1 * t, c.c2 * t, c.c3 * t};
      }
      case ChannelKind::GeneralizedAmplitudeDamping: return {c.c1 * x, c.c2 * x, c.c3 * x2};
      case ChannelKind::AmplitudeDamping:
        throw UnsupportedCombination(
            "coeff_map: amplitude damping leaves the Bell-diagonal family; use adc_output");
    }
  } else {
    if (!q) throw UnsupportedCombination("coeff_map: two-sided channels need q");
    require_probability(*q, "q");
    if (!supports_two_sided(kind)) {
      throw UnsupportedCombination("coeff_map: two-sided " + std::string(short_name(kind)) +
                                   " is not supported (only bf, pf, bpf)");
    }
    const double f = ipow((1.0 - p) * (1.0 - *q), n);
    switch (kind) {
      case ChannelKind::BitFlip: return {c.c1, c.c2 * f, c.c3 * f};
      case ChannelKind::PhaseFlip: return {c.c1 * f, c.c2 * f, c.c3};
      case ChannelKind::BitPhaseFlip: return {c.c1 * f, c.c2, c.c3 * f};
      default: break;
    }
  }
  throw std::invalid_argument("coeff_map: unknown channel kind");
}

bool AdcSpectrum::ordered_0231(bool strict) const {
  if (strict) return u2_minus_u0 > 0.0 && u3_minus_u2 > 0.0 && u1_minus_u3 > 0.0;
  constexpr double slack = 1e-14;
  return u2_minus_u0 >= -slack && u3_minus_u2 >= -slack && u1_minus_u3 >= -slack;
}

bool AdcSpectrum::ordered_0213(bool strict) const {
  if (strict) return u2_minus_u0 > 0.0 && u1_minus_u2 > 0.0 && u1_minus_u3 < 0.0;
  constexpr double slack = 1e-14;
  return u2_minus_u0 >= -slack && u1_minus_u2 >= -slack && u1_minus_u3 <= slack;
}

TwoQubitState adc_output(const BellCoefficients& c, double p, unsigned n) {
  require_probability(p, "p");
  require_passes(n);
  require_physical(c);
  const double x = ipow(1.0 - p, n);
  const double s = ipow(std::sqrt(1.0 - p), n);
  ComplexMatrix m(4, 4);
  m(0, 0) = (2.0 - (1.0 - c.c3) * x) / 4.0;
  m(1, 1) = (2.0 - (1.0 + c.c3) * x) / 4.0;
  m(2, 2) = (1.0 - c.c3) * x / 4.0;
  m(3, 3) = (1.0 + c.c3) * x / 4.0;
  m(0, 3) = m(3, 0) = (c.c1 - c.c2) * s / 4.0;
  m(1, 2) = m(2, 1) = (c.c1 + c.c2) * s / 4.0;
  return TwoQubitState::trusted(std::move(m));
}

AdcSpectrum adc_spectrum(const BellCoefficients& c, double p, unsigned n) {
  require_probability(p, "p");
  require_passes(n);
  require_physical(c);
  const double x = ipow(1.0 - p, n);
  const double y = 1.0 - x;
  const double a = (c.c1 + c.c2) * (c.c1 + c.c2);
  const double b = (c.c1 - c.c2) * (c.c1 - c.c2);
  const double root_a = std::sqrt(a * x + y * y);
  const double root_b = std::sqrt(b * x + y * y);
  const double c3x = c.c3 * x;

  // u0 and u2 subtract two O(1) quantities; rationalize so the O(x) result
  // keeps full relative precision.
  auto small_root = [&](double sign_c3, double root, double coeff) {
    const double den = 1.0 + sign_c3 * c3x + root;
    if (den <= 1e-300) return (1.0 + sign_c3 * c3x - root) / 4.0;
    const double num = x * ((2.0 + 2.0 * sign_c3 * c.c3 - coeff) + x * (c.c3 * c.c3 - 1.0));
    return num / (4.0 * den);
  };

  AdcSpectrum s;
  s.u[0] = small_root(-1.0, root_a, a);
  s.u[1] = (1.0 - c3x + root_a) / 4.0;
  s.u[2] = small_root(+1.0, root_b, b);
  s.u[3] = (1.0 + c3x + root_b) / 4.0;

  // root_a - root_b = (a - b) x / (root_a + root_b), with a - b = 4 c1 c2.
  const double root_sum = root_a + root_b;
  const double root_diff = root_sum > 0.0 ? 4.0 * c.c1 * c.c2 * x / root_sum : 0.0;
  s.u2_minus_u0 = (2.0 * c3x + root_diff) / 4.0;
  s.u3_minus_u2 = root_b / 2.0;
  s.u1_minus_u3 = (-2.0 * c3x + root_diff) / 4.0;
  s.u1_minus_u2 = (-2.0 * c3x + root_sum) / 4.0;
  s.u1_minus_u0 = root_a / 2.0;
  return s;
}

}  // namespace qbcap
