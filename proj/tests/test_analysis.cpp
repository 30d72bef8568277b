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

#include <cmath>

#include "doctest.h"
#include "qbcap/analysis.hpp"
#include "qbcap/crosscheck.hpp"
#include "qbcap/errors.hpp"

using namespace qbcap;

namespace {

SweepConfig make(ChannelKind kind, std::vector<double> p, std::vector<unsigned> n = {1}) {
  SweepConfig s;
  s.kind = kind;
  s.p_grid = std::move(p);
  s.n_list = std::move(n);
  return s;
}

std::vector<double> interior() {
  std::vector<double> g;
  for (int i = 1; i <= 99; ++i) g.push_back(i / 100.0);
  return g;
}

}  // namespace

TEST_CASE("sweep examples") {
  const auto dep = sweep(make(ChannelKind::Depolarizing, {0.0, 0.75, 1.0}));
  REQUIRE(dep.size() == 3);
  CHECK(std::abs(dep[0].capacity_general - 0.78) <= 1e-12);
  CHECK(std::abs(dep[1].capacity_general) <= 1e-12);
  CHECK(std::abs(dep[2].capacity_general - 0.26) <= 1e-12);
  CHECK(dep[2].deviation_flag);
  CHECK(std::abs(*dep[2].capacity_closed + 0.26) <= 1e-12);
  CHECK_FALSE(dep[2].branch_used.has_value());

  const auto bf = sweep(make(ChannelKind::BitFlip, {0.5}));
  CHECK(std::abs(bf[0].capacity_general - 0.645) <= 1e-12);
  CHECK(std::abs(*bf[0].capacity_closed - 0.645) <= 1e-12);
  CHECK(bf[0].branch_used == OrderingBranch::B123);

  for (ChannelKind kind : kAllChannels) {
    const auto r = sweep(make(kind, {0.0}));
    CHECK(std::abs(r[0].capacity_general - 0.78) <= 1e-12);
    REQUIRE(r[0].capacity_closed.has_value());
    CHECK(std::abs(*r[0].capacity_closed - 0.78) <= 1e-12);
  }
}

TEST_CASE("sweep record order is p, then q, then n") {
  SweepConfig s = make(ChannelKind::PhaseFlip, {0.1, 0.2}, {1, 3});
  s.sides = Sides::Two;
  s.q_grid = {0.3, 0.4, 0.5};
  const auto r = sweep(s);
  REQUIRE(r.size() == 12);
  CHECK(r[0].p == 0.1);
  CHECK(*r[0].q == 0.3);
  CHECK(r[1].n == 3);
  CHECK(*r[2].q == 0.4);
  CHECK(r[6].p == 0.2);
}

TEST_CASE("closed and general capacities agree where a branch is recorded") {
  for (ChannelKind kind : kAllChannels) {
    const auto records = sweep(make(kind, interior(), {1, 2, 10}));
    for (const auto& r : records) {
      if (!r.branch_used) continue;
      CAPTURE(short_name(kind));
      CAPTURE(r.p);
      CHECK(std::abs(*r.capacity_closed - r.capacity_general) <= 1e-12);
    }
  }
}

TEST_CASE("sweep is deterministic") {
  const auto a = sweep(make(ChannelKind::GeneralizedAmplitudeDamping, interior(), {1, 4}));
  const auto b = sweep(make(ChannelKind::GeneralizedAmplitudeDamping, interior(), {1, 4}));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].capacity_general == b[i].capacity_general);
    CHECK(a[i].spectrum == b[i].spectrum);
  }
}

TEST_CASE("sweep validation") {
  CHECK_THROWS_AS(sweep(make(ChannelKind::BitFlip, {})), ParameterOutOfRange);
  CHECK_THROWS_AS(sweep(make(ChannelKind::BitFlip, {0.5, 0.4})), ParameterOutOfRange);
  CHECK_THROWS_AS(sweep(make(ChannelKind::BitFlip, {1.2})), ParameterOutOfRange);
  CHECK_THROWS_AS(sweep(make(ChannelKind::BitFlip, {0.5}, {0})), ParameterOutOfRange);
  SweepConfig two = make(ChannelKind::Depolarizing, {0.5});
  two.sides = Sides::Two;
  two.q_grid = {0.5};
  CHECK_THROWS_AS(sweep(two), UnsupportedCombination);
  SweepConfig bad = make(ChannelKind::BitFlip, {0.5});
  bad.c = {0.9, 0.9, 0.9};
  CHECK_THROWS_AS(sweep(bad), Unphysical);
}

TEST_CASE("sudden death of the depolarized capacity") {
  const SweepConfig s = make(ChannelKind::Depolarizing, interior());
  const auto records = sweep(s);
  const auto found = detect_sudden_death(records, kSuddenDeathTolerance,
                                         capacity_of_p(s, std::nullopt, 1));
  REQUIRE(found.has_value());
  CHECK(std::abs(found->location - 0.75) <= 1e-6);
  CHECK_FALSE(found->general_stays_below);
  CHECK(std::abs(found->max_general_beyond - 0.78 * (4 * 0.99 / 3 - 1)) <= 1e-12);
  for (const auto& r : records) {
    CHECK(std::abs(r.capacity_general - 0.78 * std::abs(1 - 4 * r.p / 3)) <= 1e-12);
    CHECK(r.deviation_flag == (r.p > 0.75));
  }
}

TEST_CASE("no sudden death under bit flip") {
  const SweepConfig s = make(ChannelKind::BitFlip, interior());
  const auto records = sweep(s);
  CHECK_FALSE(detect_sudden_death(records, kSuddenDeathTolerance,
                                  capacity_of_p(s, std::nullopt, 1))
                  .has_value());
  for (const auto& r : records) CHECK(r.capacity_general >= 0.6);
}

TEST_CASE("zero capacity dies at the first grid point") {
  SweepConfig s = make(ChannelKind::PhaseFlip, {0.1, 0.2, 0.3});
  s.c = {0, 0, 0};
  const auto found = detect_sudden_death(sweep(s), kSuddenDeathTolerance,
                                         capacity_of_p(s, std::nullopt, 1));
  REQUIRE(found.has_value());
  CHECK(found->location == 0.1);
}

TEST_CASE("frozen capacity") {
  const std::vector<unsigned> passes = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 50, 100};
  const auto bf = detect_frozen(sweep(make(ChannelKind::BitFlip, {0.5}, passes)), kFrozenTolerance);
  REQUIRE(bf.has_value());
  CHECK(std::abs(bf->value - 0.6) <= 1e-8);
  CHECK(bf->location == 100);

  const auto adc =
      detect_frozen(sweep(make(ChannelKind::AmplitudeDamping, {0.5}, passes)), kFrozenTolerance);
  REQUIRE(adc.has_value());
  CHECK(std::abs(adc->value - 1.2) <= 1e-6);

  const auto dep =
      detect_frozen(sweep(make(ChannelKind::Depolarizing, {0.5}, passes)), kFrozenTolerance);
  REQUIRE(dep.has_value());
  CHECK(std::abs(dep->value) <= 1e-8);

  // Still changing between n = 1 and n = 2.
  CHECK_FALSE(detect_frozen(sweep(make(ChannelKind::BitFlip, {0.1}, {1, 2})), kFrozenTolerance)
                  .has_value());
}

TEST_CASE("two-sided bit flip surface") {
  SweepConfig s = make(ChannelKind::BitFlip, {0.0, 0.3, 0.7, 1.0}, {1, 2, 10, 100});
  s.sides = Sides::Two;
  s.q_grid = {0.0, 0.5, 1.0};
  for (const auto& r : sweep(s)) {
    const double expected = 0.6 + 0.18 * std::pow((1 - r.p) * (1 - *r.q), r.n);
    CHECK(std::abs(r.capacity_general - expected) <= 1e-12);
    CHECK(std::abs(*r.capacity_closed - expected) <= 1e-12);
  }
}

TEST_CASE("oracle crosscheck") {
  const auto report = oracle_crosscheck(42, 200);
  CHECK(report.passed());
  for (const char* category :
       {"table2.bf", "table2.pf", "table2.bpf", "table2.dep", "table2.gad", "table3.bf",
        "table3.gad", "table5.bf", "table6.bpf", "adc.matrix", "adc.spectrum", "capacity.branch",
        "capacity.adc_closed", "cptp.completeness", "cptp.trace", "cptp.hermiticity",
        "cptp.positivity", "table2.both_qubits.bf"}) {
    CAPTURE(category);
    REQUIRE(report.categories.count(category) == 1);
    CHECK(report.categories.at(category).samples > 0);
  }
  CHECK(report.categories.at("diagnostic.table2_literal_one_sided.bf").informational);
}

TEST_CASE("oracle crosscheck on an identity tuple") {
  CrosscheckTuple t;
  t.c = {0.5, 0.3, 0.1};
  t.p = 0.0;
  t.q = 0.0;
  t.passes = 3;
  CrosscheckReport report;
  crosscheck_tuple(t, report);
  for (const auto& [name, stat] : report.categories) {
    CAPTURE(name);
    CHECK(stat.max_deviation <= 1e-15);
  }
}

TEST_CASE("oracle crosscheck catches a corrupted coefficient map") {
  auto corrupted = [](ChannelKind kind, const BellCoefficients& c, double p,
                      std::optional<double> q, unsigned n, Sides sides) {
    BellCoefficients out = coeff_map(kind, c, p, q, n, sides);
    if (kind == ChannelKind::BitFlip && sides == Sides::One && n == 1) out.c3 *= 1.01;
    return out;
  };
  const auto report = oracle_crosscheck(42, 50, corrupted);
  CHECK_FALSE(report.passed());
  // The branch capacity of the corrupted coefficients is off as well.
  CHECK(report.failures() ==
        std::vector<std::string>{"capacity.branch", "table2.bf", "table2.both_qubits.bf"});
  CHECK(report.failures("table3.").empty());
  CHECK(report.categories.at("table2.bf").max_deviation > 1e-6);
}

TEST_CASE("oracle crosscheck is deterministic") {
  CHECK(format_report(oracle_crosscheck(7, 30)) == format_report(oracle_crosscheck(7, 30)));
}
