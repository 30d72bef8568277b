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

#include "qbcap/crosscheck.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qbcap/capacity.hpp"
#include "qbcap/errors.hpp"

namespace qbcap {

void CrosscheckReport::record(const std::string& category, double deviation, double tolerance,
                              bool informational) {
  DeviationStat& s = categories[category];
  s.tolerance = tolerance;
  s.informational = informational;
  s.samples += 1;
  // NaN must fail, so compare with !(a <= b).
  if (!(deviation <= s.max_deviation)) s.max_deviation = deviation;
}

bool CrosscheckReport::passed() const {
  return std::all_of(categories.begin(), categories.end(),
                     [](const auto& kv) { return kv.second.passed(); });
}

std::vector<std::string> CrosscheckReport::failures(const std::string& prefix) const {
  std::vector<std::string> out;
  for (const auto& [name, stat] : categories)
    if (name.rfind(prefix, 0) == 0 && !stat.passed()) out.push_back(name);
  return out;
}

double CrosscheckReport::max_deviation(const std::string& prefix) const {
  double m = 0.0;
  for (const auto& [name, stat] : categories)
    if (name.rfind(prefix, 0) == 0 && !stat.informational) m = std::max(m, stat.max_deviation);
  return m;
}

namespace {

double coefficient_distance(const BellCoefficients& a, const BellCoefficients& b) {
  return std::max({std::abs(a.c1 - b.c1), std::abs(a.c2 - b.c2), std::abs(a.c3 - b.c3)});
}

void record_cptp(CrosscheckReport& report, const ComplexMatrix& out) {
  const Complex tr = out.trace();
  report.record("cptp.trace", std::abs(tr - Complex{1.0}), kTraceTolerance);
  report.record("cptp.hermiticity", max_abs_diff(out, out.adjoint()), kHermiticityTolerance);
  const auto ev = hermitian_eigenvalues_ascending(out);
  report.record("cptp.positivity", std::max(0.0, -ev[0]), kPositivityTolerance);
}

}  // namespace

CrosscheckTuple random_tuple(Rng& rng) {
  static constexpr std::array<unsigned, 3> kPasses = {2, 3, 10};
  CrosscheckTuple t;
  t.c = random_bell_coefficients(rng);
  t.h = random_hamiltonian(rng);
  t.p = rng.uniform();
  t.q = rng.uniform();
  t.passes = kPasses[rng.index(kPasses.size())];
  t.general_state = random_density_matrix(rng);
  return t;
}

void crosscheck_tuple(const CrosscheckTuple& t, CrosscheckReport& report, const CoeffMapFn& map) {
  const TwoQubitState bell = bell_density(t.c);
  const TwoQubitState general = TwoQubitState::trusted(t.general_state);

  if (auto branch = select_branch(t.c)) {
    report.record("capacity.branch",
                  std::abs(capacity_branch(t.c, t.h, *branch) - capacity_general(bell, t.h)),
                  kClosedFormTolerance);
  }

  for (ChannelKind kind : kAllChannels) {
    const std::string name(short_name(kind));
    const KrausSet literal = kraus_set(kind, t.p);
    const KrausSet pass = one_sided_pass(kind, t.p);
    report.record("cptp.completeness", literal.completeness_error(), kCompletenessTolerance);
    report.record("cptp.completeness", pass.completeness_error(), kCompletenessTolerance);
    record_cptp(report, apply_one_sided(general, literal).matrix());
    record_cptp(report, apply_one_sided(general, pass).matrix());

    for (unsigned n : {1U, t.passes}) {
      if (kind == ChannelKind::AmplitudeDamping) {
        const TwoQubitState brute = apply_n_times(bell, literal, n);
        report.record("adc.matrix", max_abs_diff(adc_output(t.c, t.p, n).matrix(), brute.matrix()),
                      kClosedFormTolerance);
        auto u = adc_spectrum(t.c, t.p, n).u;
        std::sort(u.begin(), u.end());
        const auto numeric = hermitian_eigenvalues_ascending(brute.matrix());
        double dev = 0.0;
        for (std::size_t i = 0; i < 4; ++i) dev = std::max(dev, std::abs(u[i] - numeric[i]));
        report.record("adc.spectrum", dev, kSpectrumTolerance);
        try {
          const double closed = capacity_adc_closed(t.c, t.h, t.p, n).value;
          report.record("capacity.adc_closed", std::abs(closed - capacity_general(brute, t.h)),
                        kClosedFormTolerance);
        } catch (const OrderingAssumptionViolated&) {
        }
        continue;
      }

      const std::string table = n == 1 ? "table2." : "table3.";
      const BellCoefficients closed = map(kind, t.c, t.p, std::nullopt, n, Sides::One);
      const TwoQubitState brute = apply_n_times(bell, pass, n);
      report.record(table + name, coefficient_distance(closed, extract_coefficients(brute)),
                    kClosedFormTolerance);
      if (auto branch = select_branch(closed)) {
        report.record("capacity.branch",
                      std::abs(capacity_branch(closed, t.h, *branch) -
                               capacity_general(brute, t.h)),
                      kClosedFormTolerance);
      }

      if (n == 1 && kind != ChannelKind::Depolarizing) {
        const auto both = extract_coefficients(apply_two_sided(bell, literal, literal));
        report.record("table2.both_qubits." + name, coefficient_distance(closed, both),
                      kClosedFormTolerance);
        const auto one = extract_coefficients(apply_one_sided(bell, literal));
        report.record("diagnostic.table2_literal_one_sided." + name,
                      coefficient_distance(closed, one), kClosedFormTolerance, true);
      }

      if (supports_two_sided(kind)) {
        const std::string table2s = n == 1 ? "table5." : "table6.";
        const KrausSet on_b = kraus_set(kind, t.q);
        const BellCoefficients closed2 = map(kind, t.c, t.p, t.q, n, Sides::Two);
        const TwoQubitState brute2 = apply_n_times(bell, literal, on_b, n);
        report.record(table2s + name, coefficient_distance(closed2, extract_coefficients(brute2)),
                      kClosedFormTolerance);
        if (n == 1) {
          report.record("cptp.completeness", on_b.completeness_error(), kCompletenessTolerance);
          record_cptp(report, apply_two_sided(general, literal, on_b).matrix());
        }
      }
    }
  }
}

CrosscheckReport oracle_crosscheck(std::uint64_t seed, std::size_t trials, const CoeffMapFn& map) {
  Rng rng(seed);
  CrosscheckReport report;
  for (std::size_t i = 0; i < trials; ++i) crosscheck_tuple(random_tuple(rng), report, map);
  return report;
}

std::string format_report(const CrosscheckReport& report) {
  std::ostringstream out;
  for (const auto& [name, stat] : report.categories) {
    char line[256];
    std::snprintf(line, sizeof line, "%-44s samples=%-6zu max_dev=%.3e tol=%.0e %s\n",
                  name.c_str(), stat.samples, stat.max_deviation, stat.tolerance,
                  stat.informational ? "INFO" : (stat.passed() ? "PASS" : "FAIL"));
    out << line;
  }
  return out.str();
}

}  // namespace qbcap
