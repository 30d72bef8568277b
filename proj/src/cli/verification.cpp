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

#include "qbcap/cli/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "qbcap/analysis.hpp"
#include "qbcap/capacity.hpp"
#include "qbcap/cli/config.hpp"
#include "qbcap/cli/figures.hpp"
#include "qbcap/cli/output.hpp"
#include "qbcap/sampling.hpp"

namespace qbcap::cli {

namespace {

constexpr double kFigureCapacity = 0.78;
constexpr double kCrosscheckBudgetSeconds = 10.0;
constexpr double kMonotoneSlack = 1e-12;

const BatteryHamiltonian kH{0.6, 0.3};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string fixed(double v, int digits = 6) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

SweepConfig figure_sweep(ChannelKind kind, const BellCoefficients& c, std::vector<double> p_grid,
                         std::vector<unsigned> n_list) {
  SweepConfig s;
  s.kind = kind;
  s.c = c;
  s.h = kH;
  s.p_grid = std::move(p_grid);
  s.n_list = std::move(n_list);
  return s;
}

BellCoefficients corrupted_map(ChannelKind kind, const BellCoefficients& c, double p,
                               std::optional<double> q, unsigned n, Sides sides) {
  BellCoefficients out = coeff_map(kind, c, p, q, n, sides);
  if (kind == ChannelKind::BitFlip && sides == Sides::One) out.c2 += 1e-3;
  return out;
}

}  // namespace

Verifier::Verifier(VerifyOptions options) : options_(std::move(options)) {}

const CrosscheckReport& Verifier::crosscheck() {
  if (!crosscheck_) {
    const auto start = std::chrono::steady_clock::now();
    crosscheck_ = options_.self_test
                      ? oracle_crosscheck(options_.seed, options_.trials, corrupted_map)
                      : oracle_crosscheck(options_.seed, options_.trials);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    crosscheck_fast_ = elapsed.count() < kCrosscheckBudgetSeconds;
  }
  return *crosscheck_;
}

CriterionResult Verifier::run(int id) {
  switch (id) {
    case 1: return baseline();
    case 2: return oracle();
    case 3: return cptp();
    case 4: return functional();
    case 5: return sudden_death();
    case 6: return adc_monotone();
    case 7: return orderings();
    case 8: return frozen();
    case 9: return surfaces();
    case 10: return determinism();
    default: throw UsageError("no criterion " + std::to_string(id));
  }
}

std::vector<CriterionResult> Verifier::run_all() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id)
    if (options_.criteria.empty() || options_.criteria.count(id)) out.push_back(run(id));
  return out;
}

CriterionResult Verifier::baseline() {
  CriterionResult r{1, "baseline capacity 0.78 at p = 0", true, 0.0, ""};
  const BellCoefficients c = kDefaultCoefficients;
  std::vector<std::string> missing;
  auto check = [&](ChannelKind kind, Sides sides) {
    SweepConfig s = figure_sweep(kind, c, {0.0}, {1});
    s.sides = sides;
    std::optional<double> q;
    if (sides == Sides::Two) {
      s.q_grid = {0.0};
      q = 0.0;
    }
    const SweepRecord rec = evaluate_point(s, 0.0, q, 1);
    const std::string tag = std::string(short_name(kind)) + "/" + std::string(to_string(sides));
    double dev = std::abs(rec.capacity_general - kFigureCapacity);
    if (!rec.capacity_closed) {
      missing.push_back(tag);
    } else {
      dev = std::max(dev, std::abs(*rec.capacity_closed - kFigureCapacity));
    }
    if (!(dev <= kClosedFormTolerance) || rec.error) r.passed = false;
    r.max_deviation = std::max(*r.max_deviation, dev);
  };
  for (ChannelKind kind : kAllChannels) check(kind, Sides::One);
  for (ChannelKind kind : kTwoSidedChannels) check(kind, Sides::Two);
  if (!missing.empty()) r.passed = false;
  r.detail = "9 channel/side combinations, closed and general";
  if (!missing.empty()) r.detail += "; no closed form for " + join(missing);
  return r;
}

CriterionResult Verifier::oracle() {
  const auto& report = crosscheck();
  CriterionResult r{2, "closed forms match brute-force Kraus evolution", true, 0.0, ""};
  std::vector<std::string> failing;
  for (const char* prefix : {"table2.", "table3.", "table5.", "table6.", "adc."}) {
    for (auto& f : report.failures(prefix)) failing.push_back(f);
    r.max_deviation = std::max(*r.max_deviation, report.max_deviation(prefix));
  }
  r.passed = failing.empty() && crosscheck_fast_;
  r.detail = std::to_string(options_.trials) + " tuples, seed " + std::to_string(options_.seed);
  if (!failing.empty()) r.detail += "; failing: " + join(failing);
  if (!crosscheck_fast_) r.detail += "; runtime budget of 10 s exceeded";
  if (options_.self_test) r.detail += "; self-test: bf coefficient map corrupted";
  return r;
}

CriterionResult Verifier::cptp() {
  const auto& report = crosscheck();
  CriterionResult r{3, "CPTP completeness, trace, hermiticity, positivity", true, 0.0, ""};
  const auto failing = report.failures("cptp.");
  r.max_deviation = report.max_deviation("cptp.");
  r.passed = failing.empty();
  r.detail = std::to_string(options_.trials) + " tuples";
  if (!failing.empty()) r.detail += "; failing: " + join(failing);
  return r;
}

CriterionResult Verifier::functional() {
  CriterionResult r{4, "capacity nonnegative, unitarily invariant, branch formulas exact", true,
                    0.0, ""};
  Rng rng(options_.seed ^ 0x4c41505343ULL);
  double min_capacity = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const TwoQubitState rho = TwoQubitState::trusted(random_density_matrix(rng));
    min_capacity = std::min(min_capacity, capacity_general(rho, random_hamiltonian(rng)));
  }
  double invariance = 0.0;
  for (int i = 0; i < 100; ++i) {
    const ComplexMatrix m = random_density_matrix(rng);
    const ComplexMatrix u = haar_unitary(rng);
    const BatteryHamiltonian h = random_hamiltonian(rng);
    const double before = capacity_general(TwoQubitState::trusted(m), h);
    ComplexMatrix rotated = u * m * u.adjoint();
    rotated = (rotated + rotated.adjoint()) * Complex{0.5};
    invariance = std::max(invariance,
                          std::abs(capacity_general(TwoQubitState::trusted(rotated), h) - before));
  }
  double branch = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const BellCoefficients c = random_branch_coefficients(rng);
    const BatteryHamiltonian h = random_hamiltonian(rng);
    const double closed = capacity_branch(c, h, *select_branch(c));
    branch = std::max(branch, std::abs(closed - capacity_general(bell_density(c), h)));
  }
  r.passed = min_capacity >= -1e-12 && invariance <= 1e-10 && branch <= kClosedFormTolerance;
  r.max_deviation = std::max(invariance, branch);
  r.detail = "min C " + sci(min_capacity) + " (1000), unitary " + sci(invariance) +
             " (100 Haar), branch " + sci(branch) + " (1000)";
  return r;
}

CriterionResult Verifier::sudden_death() {
  CriterionResult r{5, "dep sudden death at p = 0.75", true, 0.0, ""};
  const SweepConfig s =
      figure_sweep(ChannelKind::Depolarizing, kDefaultCoefficients, kInteriorGrid.values(), {1});
  const auto records = sweep(s);
  const auto found = detect_sudden_death(records, kSuddenDeathTolerance,
                                         capacity_of_p(s, std::nullopt, 1));
  double law = 0.0;
  bool flags_ok = true;
  std::size_t flagged = 0;
  for (const auto& rec : records) {
    law = std::max(law, std::abs(rec.capacity_general - kFigureCapacity *
                                                            std::abs(1.0 - 4.0 * rec.p / 3.0)));
    if (rec.deviation_flag) ++flagged;
    if (rec.deviation_flag != (rec.p > 0.75)) flags_ok = false;
  }
  const double root_error = found ? std::abs(found->location - 0.75) : 1.0;
  r.passed = found && root_error <= kRootWidth && law <= kClosedFormTolerance && flags_ok;
  r.max_deviation = law;
  r.detail = found ? "root " + fixed(found->location, 8) : "no root found";
  r.detail += ", general vs 0.78|1-4p/3| " + sci(law) + ", " + std::to_string(flagged) +
              " points beyond the root flagged";
  if (found && !found->general_stays_below) {
    r.detail += "; documented deviation: capacity_general rises to " +
                fixed(found->max_general_beyond) + " past the root instead of staying at zero";
  }
  return r;
}

CriterionResult Verifier::adc_monotone() {
  CriterionResult r{6, "adc capacity nondecreasing in p, C(1) = 1.2", true, 0.0, ""};
  const SweepConfig s = figure_sweep(ChannelKind::AmplitudeDamping, kDefaultCoefficients,
                                     kInteriorGrid.values(), {1});
  const auto records = sweep(s);
  std::optional<std::size_t> first_drop;
  double min_value = records.front().capacity_general;
  double min_p = records.front().p;
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].capacity_general < records[i - 1].capacity_general - kMonotoneSlack &&
        !first_drop)
      first_drop = i;
    if (records[i].capacity_general < min_value) {
      min_value = records[i].capacity_general;
      min_p = records[i].p;
    }
  }
  const SweepRecord end = evaluate_point(s, 1.0, std::nullopt, 1);
  double limit = std::abs(end.capacity_general - 1.2);
  if (end.capacity_closed) limit = std::max(limit, std::abs(*end.capacity_closed - 1.2));
  r.passed = !first_drop && limit <= kClosedFormTolerance && end.capacity_closed.has_value();
  r.max_deviation = limit;
  r.detail = "C(1) deviation " + sci(limit);
  if (first_drop) {
    const auto& a = records[*first_drop - 1];
    const auto& b = records[*first_drop];
    r.detail += "; decreases from C(" + format_double(a.p) + ") = " + fixed(a.capacity_general) +
                " to C(" + format_double(b.p) + ") = " + fixed(b.capacity_general) + ", minimum " +
                fixed(min_value) + " at p = " + format_double(min_p);
  }
  return r;
}

CriterionResult Verifier::orderings() {
  CriterionResult r{7, "adc eigenvalue orderings", true, std::nullopt, ""};
  const std::vector<unsigned> passes = {1, 2, 3, 4, 10, 100};
  const auto grid = kInteriorGrid.values();
  std::vector<std::string> broken;
  double smallest_gap = 1.0;
  for (unsigned n : passes) {
    for (double p : grid) {
      const AdcSpectrum a = adc_spectrum(kDefaultCoefficients, p, n);
      const AdcSpectrum b = adc_spectrum(kFigure2Coefficients, p, n);
      smallest_gap = std::min({smallest_gap, a.u2_minus_u0, a.u3_minus_u2, a.u1_minus_u3,
                               b.u2_minus_u0, b.u1_minus_u2, -b.u1_minus_u3});
      if (!a.ordered_0231(true)) broken.push_back("c=(0.5,0.3,0.1) p=" + format_double(p) +
                                                  " n=" + std::to_string(n));
      if (!b.ordered_0213(true)) broken.push_back("c=(0.1,0.5,0.3) p=" + format_double(p) +
                                                  " n=" + std::to_string(n));
    }
  }
  r.passed = broken.empty();
  r.detail = "99 p values x n in {1,2,3,4,10,100}, smallest gap " + sci(smallest_gap);
  if (!broken.empty())
    r.detail += "; violated at " + std::to_string(broken.size()) + " points, first " + broken[0];
  return r;
}

CriterionResult Verifier::frozen() {
  CriterionResult r{8, "frozen capacity for large n", true, 0.0, ""};
  const std::vector<unsigned> passes = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 50, 100};
  auto frozen_value = [&](ChannelKind kind) {
    const auto records = sweep(figure_sweep(kind, kDefaultCoefficients, {0.5}, passes));
    return detect_frozen(records, kFrozenTolerance);
  };
  const auto bf = frozen_value(ChannelKind::BitFlip);
  const auto adc = frozen_value(ChannelKind::AmplitudeDamping);
  const SweepRecord dep =
      evaluate_point(figure_sweep(ChannelKind::Depolarizing, kDefaultCoefficients, {0.5}, {100}),
                     0.5, std::nullopt, 100);
  const double bf_dev = bf ? std::abs(bf->value - 0.6) : 1.0;
  const double adc_dev = adc ? std::abs(adc->value - 1.2) : 1.0;
  r.passed = bf && bf_dev <= 1e-8 && adc && adc_dev <= 1e-6 && dep.capacity_general <= 1e-8;
  r.max_deviation = std::max(bf_dev, adc_dev);
  r.detail = "bf " + (bf ? fixed(bf->value, 10) : std::string("not frozen")) + ", adc " +
             (adc ? fixed(adc->value, 10) : std::string("not frozen")) + ", dep n=100 " +
             sci(dep.capacity_general);
  return r;
}

CriterionResult Verifier::surfaces() {
  CriterionResult r{9, "two-sided bf surfaces", true, 0.0, ""};
  SweepConfig s = figure_sweep(ChannelKind::BitFlip, kDefaultCoefficients,
                               GridSpec{0.0, 1.0, 11}.values(), {1, 2, 10, 100});
  s.sides = Sides::Two;
  s.q_grid = s.p_grid;
  const auto records = sweep(s);
  const std::size_t np = s.p_grid.size(), nq = s.q_grid.size(), nn = s.n_list.size();
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const SweepRecord& {
    return records[(i * nq + j) * nn + k];
  };
  double dev = 0.0;
  bool monotone = true, closed_present = true;
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = 0; j < nq; ++j) {
      for (std::size_t k = 0; k < nn; ++k) {
        const SweepRecord& rec = at(i, j, k);
        const double expected =
            0.6 + 0.18 * ipow((1.0 - rec.p) * (1.0 - *rec.q), rec.n);
        dev = std::max(dev, std::abs(rec.capacity_general - expected));
        if (rec.capacity_closed)
          dev = std::max(dev, std::abs(*rec.capacity_closed - expected));
        else
          closed_present = false;
        const double v = rec.capacity_general;
        if (i + 1 < np && at(i + 1, j, k).capacity_general > v + kMonotoneSlack) monotone = false;
        if (j + 1 < nq && at(i, j + 1, k).capacity_general > v + kMonotoneSlack) monotone = false;
        if (k + 1 < nn && at(i, j, k + 1).capacity_general > v + kMonotoneSlack) monotone = false;
      }
    }
  }
  double corner = 0.0;
  for (std::size_t k = 0; k < nn; ++k)
    corner = std::max(corner, std::abs(at(np - 1, nq - 1, k).capacity_general - 0.6));
  r.passed = dev <= kClosedFormTolerance && corner <= kClosedFormTolerance && monotone &&
             closed_present;
  r.max_deviation = std::max(dev, corner);
  r.detail = "11x11 grid, n in {1,2,10,100}, corner deviation " + sci(corner) +
             (monotone ? ", nonincreasing in p, q, n" : ", monotonicity violated");
  if (!closed_present) r.detail += ", closed form missing";
  return r;
}

CriterionResult Verifier::determinism() {
  CriterionResult r{10, "deterministic reports and figure CSV", true, std::nullopt, ""};
  const std::string first = format_report(crosscheck());
  const std::string second = format_report(options_.self_test
                                               ? oracle_crosscheck(options_.seed, options_.trials,
                                                                   corrupted_map)
                                               : oracle_crosscheck(options_.seed, options_.trials));
  RunConfig config;
  config.command = Command::Figure;
  const Rendered a = render_figure("1b", config);
  const Rendered b = render_figure("1b", config);
  bool same_csv = a.files.size() == b.files.size();
  for (std::size_t i = 0; same_csv && i < a.files.size(); ++i)
    same_csv = a.files[i].name == b.files[i].name && a.files[i].content == b.files[i].content;
  r.passed = first == second && same_csv;
  r.detail = std::string("crosscheck report ") + (first == second ? "identical" : "differs") +
             ", figure 1b files " + (same_csv ? "identical" : "differ");
  return r;
}

std::string format_results(const std::vector<CriterionResult>& results,
                           const CrosscheckReport* crosscheck) {
  std::ostringstream out;
  out << "criterion  status  max_dev     description\n";
  for (const auto& r : results) {
    char head[64];
    std::snprintf(head, sizeof head, "C%02d        %-6s  %-10s  ", r.id,
                  r.passed ? "PASS" : "FAIL",
                  r.max_deviation ? sci(*r.max_deviation).c_str() : "-");
    out << head << r.title << "\n             " << r.detail << "\n";
  }
  if (crosscheck) out << "\noracle crosscheck categories\n" << format_report(*crosscheck);
  std::vector<std::string> failed;
  for (const auto& r : results) {
    char id[8];
    std::snprintf(id, sizeof id, "C%02d", r.id);
    if (!r.passed) failed.push_back(std::string(id) + " (" + r.title + ")");
  }
  const std::size_t passed = results.size() - failed.size();
  out << "\n" << passed << "/" << results.size() << " criteria passed\n";
  if (!failed.empty()) out << "FAILED: " << join(failed) << "\n";
  return out.str();
}

int run_verify(const VerifyOptions& options, std::ostream& out) {
  Verifier verifier(options);
  const auto results = verifier.run_all();
  const bool used_crosscheck =
      options.criteria.empty() || options.criteria.count(2) || options.criteria.count(3) ||
      options.criteria.count(10);
  out << format_results(results, used_crosscheck ? &verifier.crosscheck() : nullptr);
  const bool ok = std::all_of(results.begin(), results.end(),
                              [](const CriterionResult& r) { return r.passed; });
  return ok ? 0 : 1;
}

}  // namespace qbcap::cli
