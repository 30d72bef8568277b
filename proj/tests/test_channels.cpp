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

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "qbcap/channels.hpp"
#include "qbcap/errors.hpp"
#include "qbcap/model.hpp"
#include "qbcap/sampling.hpp"

using namespace qbcap;

namespace {

const BellCoefficients kC{0.5, 0.3, 0.1};

double coeff_diff(const BellCoefficients& a, const BellCoefficients& b) {
  return std::max({std::abs(a.c1 - b.c1), std::abs(a.c2 - b.c2), std::abs(a.c3 - b.c3)});
}

KrausSet identity_set() { return KrausSet{{ComplexMatrix::identity(2)}, "id", {}}; }

}  // namespace

TEST_CASE("kraus_set examples") {
  const KrausSet bf = kraus_set(ChannelKind::BitFlip, 0.0);
  REQUIRE(bf.operators.size() == 2);
  CHECK(bf.operators[0] == ComplexMatrix::identity(2));
  CHECK(max_abs_diff(bf.operators[1], ComplexMatrix(2, 2)) == 0.0);
  CHECK(bf.completeness_error() == 0.0);

  const KrausSet adc = kraus_set(ChannelKind::AmplitudeDamping, 1.0);
  REQUIRE(adc.operators.size() == 2);
  CHECK(max_abs_diff(adc.operators[0], ComplexMatrix(2, 2, {1, 0, 0, 0})) == 0.0);
  CHECK(max_abs_diff(adc.operators[1], ComplexMatrix(2, 2, {0, 1, 0, 0})) == 0.0);

  const auto dep = coeff_map(ChannelKind::Depolarizing, kC, 0.75, std::nullopt, 1, Sides::One);
  CHECK(coeff_diff(dep, {0, 0, 0}) <= 1e-15);
  CHECK(coeff_diff(extract_coefficients(apply_one_sided(bell_density(kC),
                                                        kraus_set(ChannelKind::Depolarizing, 0.75))),
                   {0, 0, 0}) <= 1e-15);
}

TEST_CASE("every Kraus set is complete") {
  for (ChannelKind kind : kAllChannels) {
    for (double p : {0.0, 0.1, 0.37, 0.5, 0.9, 1.0}) {
      CAPTURE(short_name(kind));
      CAPTURE(p);
      CHECK(kraus_set(kind, p).is_complete());
      CHECK(one_sided_pass(kind, p).is_complete());
    }
  }
  for (double mixing : {0.0, 0.3, 1.0})
    CHECK(generalized_amplitude_damping(mixing, 0.4).is_complete());
}

TEST_CASE("kraus_set rejects probabilities outside [0, 1]") {
  CHECK_THROWS_AS(kraus_set(ChannelKind::BitFlip, -0.01), ParameterOutOfRange);
  CHECK_THROWS_AS(kraus_set(ChannelKind::AmplitudeDamping, 1.5), ParameterOutOfRange);
  CHECK_THROWS_AS(one_sided_pass(ChannelKind::Depolarizing, 2.0), ParameterOutOfRange);
}

TEST_CASE("apply_one_sided examples") {
  Rng rng(1);
  const TwoQubitState rho = TwoQubitState::trusted(random_density_matrix(rng));
  CHECK(max_abs_diff(apply_one_sided(rho, identity_set()).matrix(), rho.matrix()) <= 1e-15);

  const auto bf = apply_one_sided(bell_density(kC), one_sided_pass(ChannelKind::BitFlip, 0.5));
  CHECK(coeff_diff(extract_coefficients(bf), {0.5, 0.075, 0.025}) <= 1e-15);

  // Expected output state at p = 1/2, entry by entry.
  const double s = std::sqrt(0.5);
  ComplexMatrix expected(4, 4);
  expected(0, 0) = (1 + 0.1) / 4 + 0.5 * (1 - 0.1) / 4;
  expected(1, 1) = (1 - 0.1) / 4 + 0.5 * (1 + 0.1) / 4;
  expected(2, 2) = 0.5 * (1 - 0.1) / 4;
  expected(3, 3) = 0.5 * (1 + 0.1) / 4;
  expected(0, 3) = expected(3, 0) = s * (0.5 - 0.3) / 4;
  expected(1, 2) = expected(2, 1) = s * (0.5 + 0.3) / 4;
  const auto adc = apply_one_sided(bell_density(kC), kraus_set(ChannelKind::AmplitudeDamping, 0.5));
  CHECK(max_abs_diff(adc.matrix(), expected) <= 1e-14);
  CHECK(max_abs_diff(adc_output(kC, 0.5, 1).matrix(), expected) <= 1e-14);
}

TEST_CASE("a single pass acts like the channel on both qubits") {
  // Literal operators on qubit A alone give c2 (1-p); coeff_map
  // gives c2 (1-p)^2, the same channel applied to both qubits.
  const auto literal = kraus_set(ChannelKind::BitFlip, 0.5);
  const auto one = extract_coefficients(apply_one_sided(bell_density(kC), literal));
  CHECK(coeff_diff(one, {0.5, 0.15, 0.05}) <= 1e-15);
  const auto both = extract_coefficients(apply_two_sided(bell_density(kC), literal, literal));
  CHECK(coeff_diff(both, {0.5, 0.075, 0.025}) <= 1e-15);
  CHECK(one_sided_pass(ChannelKind::BitFlip, 0.5).parameters.at("exposure") == 0.75);
}

TEST_CASE("apply_two_sided examples") {
  const TwoQubitState rho = bell_density(kC);
  CHECK(max_abs_diff(apply_two_sided(rho, identity_set(), identity_set()).matrix(), rho.matrix()) <=
        1e-15);

  const auto bf = kraus_set(ChannelKind::BitFlip, 0.5);
  CHECK(coeff_diff(extract_coefficients(apply_two_sided(rho, bf, bf)), {0.5, 0.075, 0.025}) <= 1e-15);
  CHECK(coeff_diff(coeff_map(ChannelKind::BitFlip, kC, 0.5, 0.5, 1, Sides::Two),
                   {0.5, 0.075, 0.025}) <= 1e-15);

  for (double q : {0.0, 0.4, 1.0}) {
    const auto pf = apply_two_sided(rho, kraus_set(ChannelKind::PhaseFlip, 1.0),
                                    kraus_set(ChannelKind::PhaseFlip, q));
    CHECK(coeff_diff(extract_coefficients(pf), {0, 0, 0.1}) <= 1e-15);
    CHECK(coeff_diff(coeff_map(ChannelKind::PhaseFlip, kC, 1.0, q, 1, Sides::Two), {0, 0, 0.1}) <=
          1e-15);
  }
}

TEST_CASE("apply_n_times examples") {
  const TwoQubitState rho = bell_density(kC);
  const auto bf = one_sided_pass(ChannelKind::BitFlip, 0.5);
  CHECK(max_abs_diff(apply_n_times(rho, bf, 1).matrix(), apply_one_sided(rho, bf).matrix()) == 0.0);

  const double q = std::pow(0.5, 4);
  CHECK(coeff_diff(extract_coefficients(apply_n_times(rho, bf, 2)), {0.5, 0.3 * q, 0.1 * q}) <=
        1e-15);
  CHECK(coeff_diff(coeff_map(ChannelKind::BitFlip, kC, 0.5, std::nullopt, 2, Sides::One),
                   {0.5, 0.3 * q, 0.1 * q}) <= 1e-15);

  ComplexMatrix ground(4, 4);
  ground(0, 0) = ground(1, 1) = 0.5;
  const auto adc = apply_n_times(rho, kraus_set(ChannelKind::AmplitudeDamping, 0.5), 100);
  CHECK(max_abs_diff(adc.matrix(), ground) <= 1e-10);

  CHECK_THROWS_AS(apply_n_times(rho, bf, 0), ParameterOutOfRange);
}

TEST_CASE("coeff_map examples") {
  CHECK(coeff_diff(coeff_map(ChannelKind::GeneralizedAmplitudeDamping, kC, 0.5, std::nullopt, 1,
                             Sides::One),
                   {0.25, 0.15, 0.025}) <= 1e-15);
  const double f = 0.25 * 0.25;
  CHECK(coeff_diff(coeff_map(ChannelKind::BitPhaseFlip, kC, 0.5, 0.5, 2, Sides::Two),
                   {f * 0.5, 0.3, f * 0.1}) <= 1e-15);
  CHECK(coeff_diff(coeff_map(ChannelKind::Depolarizing, kC, 0.5, std::nullopt, 3, Sides::One),
                   {0.5 / 27, 0.3 / 27, 0.1 / 27}) <= 1e-15);
}

TEST_CASE("coeff_map rejects unsupported combinations") {
  CHECK_THROWS_AS(coeff_map(ChannelKind::AmplitudeDamping, kC, 0.5, std::nullopt, 1, Sides::One),
                  UnsupportedCombination);
  CHECK_THROWS_AS(coeff_map(ChannelKind::Depolarizing, kC, 0.5, 0.5, 1, Sides::Two),
                  UnsupportedCombination);
  CHECK_THROWS_AS(coeff_map(ChannelKind::GeneralizedAmplitudeDamping, kC, 0.5, 0.5, 1, Sides::Two),
                  UnsupportedCombination);
  CHECK_THROWS_AS(coeff_map(ChannelKind::BitFlip, kC, 0.5, std::nullopt, 1, Sides::Two),
                  UnsupportedCombination);
  CHECK_THROWS_AS(coeff_map(ChannelKind::BitFlip, kC, 0.5, 0.2, 1, Sides::One),
                  UnsupportedCombination);
  CHECK_THROWS_AS(coeff_map(ChannelKind::BitFlip, kC, 1.5, std::nullopt, 1, Sides::One),
                  ParameterOutOfRange);
  CHECK_THROWS_AS(coeff_map(ChannelKind::BitFlip, kC, 0.5, std::nullopt, 0, Sides::One),
                  ParameterOutOfRange);
}

TEST_CASE("adc spectrum examples") {
  for (unsigned n : {1U, 2U, 10U}) {
    auto u = adc_spectrum(kC, 0.0, n).u;
    auto l = bell_spectrum(kC);
    std::sort(u.begin(), u.end());
    std::sort(l.begin(), l.end());
    for (int i = 0; i < 4; ++i) CHECK(std::abs(u[i] - l[i]) <= 1e-15);
    CHECK(max_abs_diff(adc_output(kC, 0.0, n).matrix(), bell_density(kC).matrix()) <= 1e-15);
  }

  const auto s = adc_spectrum(kC, 0.5, 1);
  const std::array<double, 4> want = {0.048754, 0.426246, 0.132596, 0.392404};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(s.u[i] - want[i]) <= 1e-6);

  const auto limit = adc_spectrum(kC, 0.5, 100);
  const std::array<double, 4> half = {0, 0.5, 0, 0.5};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(limit.u[i] - half[i]) <= 1e-10);
}

TEST_CASE("adc gaps agree with the eigenvalues") {
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const BellCoefficients c = random_bell_coefficients(rng);
    const double p = rng.uniform();
    const auto s = adc_spectrum(c, p, 1 + static_cast<unsigned>(rng.index(5)));
    CHECK(std::abs(s.u2_minus_u0 - (s.u[2] - s.u[0])) <= 1e-14);
    CHECK(std::abs(s.u3_minus_u2 - (s.u[3] - s.u[2])) <= 1e-14);
    CHECK(std::abs(s.u1_minus_u3 - (s.u[1] - s.u[3])) <= 1e-14);
    CHECK(std::abs(s.u1_minus_u2 - (s.u[1] - s.u[2])) <= 1e-14);
    CHECK(std::abs(s.u1_minus_u0 - (s.u[1] - s.u[0])) <= 1e-14);
  }
}

TEST_CASE("channel names round trip") {
  for (ChannelKind kind : kAllChannels) CHECK(parse_channel(short_name(kind)) == kind);
  CHECK_FALSE(parse_channel("xyz").has_value());
  CHECK(parse_sides("two") == Sides::Two);
  CHECK(supports_two_sided(ChannelKind::PhaseFlip));
  CHECK_FALSE(supports_two_sided(ChannelKind::Depolarizing));
  CHECK_FALSE(preserves_bell_form(ChannelKind::AmplitudeDamping));
}
