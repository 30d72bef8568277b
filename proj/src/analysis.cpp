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

#include "qbcap/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "qbcap/errors.hpp"

namespace qbcap {

std::optional<ClosedCapacity> closed_capacity(ChannelKind kind, Sides sides,
                                              const BellCoefficients& c,
                                              const BatteryHamiltonian& h, double p,
                                              std::optional<double> q, unsigned n) {
  if (kind == ChannelKind::AmplitudeDamping) {
    if (sides != Sides::One)
      throw UnsupportedCombination("amplitude damping is only modelled on qubit A");
    try {
      const AdcClosedCapacity adc = capacity_adc_closed(c, h, p, n);
      return ClosedCapacity{adc.value, adc.form};
    } catch (const OrderingAssumptionViolated&) {
      return std::nullopt;
    }
  }
  const BellCoefficients mapped = coeff_map(kind, c, p, q, n, sides);
  if (auto branch = select_branch(mapped))
    return ClosedCapacity{capacity_branch(mapped, h, *branch), branch};
  if (auto initial = select_branch(c))
    return ClosedCapacity{branch_formula(mapped, h, *initial), std::nullopt};
  return std::nullopt;
}

TwoQubitState evolve_brute_force(ChannelKind kind, Sides sides, const BellCoefficients& c,
                                 double p, std::optional<double> q, unsigned n) {
  const TwoQubitState rho = bell_density(c);
  if (sides == Sides::One) return apply_n_times(rho, one_sided_pass(kind, p), n);
  if (!q) throw UnsupportedCombination("two-sided evolution needs q");
  if (!supports_two_sided(kind)) {
    throw UnsupportedCombination("two-sided " + std::string(short_name(kind)) +
                                 " is not supported (only bf, pf, bpf)");
  }
  return apply_n_times(rho, kraus_set(kind, p), kraus_set(kind, *q), n);
}

SweepRecord evaluate_point(const SweepConfig& config, double p, std::optional<double> q,
                           unsigned n) {
  SweepRecord r;
  r.kind = config.kind;
  r.sides = config.sides;
  r.p = p;
  r.q = q;
  r.n = n;
  try {
    const TwoQubitState state = evolve_brute_force(config.kind, config.sides, config.c, p, q, n);
    r.spectrum = hermitian_eigenvalues_ascending(state.matrix());
    r.capacity_general = capacity_from_spectrum(r.spectrum, config.h);
    if (auto closed = closed_capacity(config.kind, config.sides, config.c, config.h, p, q, n)) {
      r.capacity_closed = closed->value;
      r.branch_used = closed->branch;
      r.deviation_flag = std::abs(closed->value - r.capacity_general) > kDeviationTolerance;
    }
  } catch (const Error& e) {
    r.error = e.what();
    r.capacity_general = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

namespace {

void validate_grid(const std::vector<double>& grid, const char* name) {
  if (grid.empty()) throw ParameterOutOfRange(std::string(name) + " grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0 && grid[i] <= 1.0))
      throw ParameterOutOfRange(std::string(name) + " grid leaves [0, 1]");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw ParameterOutOfRange(std::string(name) + " grid is not ascending");
  }
}

}  // namespace

void validate(const SweepConfig& config) {
  require_physical(config.c);
  validate_grid(config.p_grid, "p");
  if (config.sides == Sides::Two) {
    if (!supports_two_sided(config.kind)) {
      throw UnsupportedCombination("two-sided " + std::string(short_name(config.kind)) +
                                   " is not supported (only bf, pf, bpf)");
    }
    validate_grid(config.q_grid, "q");
  }
  if (config.n_list.empty()) throw ParameterOutOfRange("n list is empty");
  for (unsigned n : config.n_list)
    if (n == 0) throw ParameterOutOfRange("n must be >= 1");
}

std::vector<SweepRecord> sweep(const SweepConfig& config) {
  validate(config);
  std::vector<std::optional<double>> qs;
  if (config.sides == Sides::Two)
    qs.assign(config.q_grid.begin(), config.q_grid.end());
  else
    qs.push_back(std::nullopt);

  std::vector<SweepRecord> out;
  out.reserve(config.p_grid.size() * qs.size() * config.n_list.size());
  for (double p : config.p_grid)
    for (const auto& q : qs)
      for (unsigned n : config.n_list) out.push_back(evaluate_point(config, p, q, n));
  return out;
}

std::function<double(double)> capacity_of_p(const SweepConfig& config, std::optional<double> q,
                                            unsigned n) {
  return [config, q, n](double p) {
    if (auto closed = closed_capacity(config.kind, config.sides, config.c, config.h, p, q, n))
      return closed->value;
    return capacity_general(evolve_brute_force(config.kind, config.sides, config.c, p, q, n),
                            config.h);
  };
}

std::optional<PhenomenonReport> detect_sudden_death(std::span<const SweepRecord> records,
                                                    double tol,
                                                    const std::function<double(double)>& refine) {
  std::vector<const SweepRecord*> valid;
  for (const auto& r : records)
    if (!r.error) valid.push_back(&r);
  auto capacity_at = [](const SweepRecord& r) {
    return r.capacity_closed ? *r.capacity_closed : r.capacity_general;
  };

  std::size_t hit = valid.size();
  for (std::size_t i = 0; i < valid.size(); ++i) {
    if (capacity_at(*valid[i]) <= tol) {
      hit = i;
      break;
    }
  }
  if (hit == valid.size()) return std::nullopt;

  PhenomenonReport report;
  report.kind = PhenomenonKind::SuddenDeath;
  report.location = valid[hit]->p;
  report.value = capacity_at(*valid[hit]);
  if (hit > 0 && refine) {
    double lo = valid[hit - 1]->p;
    double hi = valid[hit]->p;
    while (hi - lo > kRootWidth) {
      const double mid = 0.5 * (lo + hi);
      if (refine(mid) <= tol)
        hi = mid;
      else
        lo = mid;
    }
    report.location = hi;
    report.value = refine(hi);
  }

  const std::size_t first = hit >= 3 ? hit - 3 : 0;
  const std::size_t last = std::min(valid.size(), hit + 4);
  for (std::size_t i = first; i < last; ++i)
    report.evidence.emplace_back(valid[i]->p, capacity_at(*valid[i]));

  report.general_stays_below = true;
  report.max_general_beyond = 0.0;
  for (const auto* r : valid) {
    if (r->p < report.location) continue;
    report.max_general_beyond = std::max(report.max_general_beyond, r->capacity_general);
    if (r->capacity_general > tol) report.general_stays_below = false;
  }
  return report;
}

std::optional<PhenomenonReport> detect_frozen(std::span<const SweepRecord> records, double tol) {
  std::map<unsigned, double> by_n;
  for (const auto& r : records)
    if (!r.error) by_n[r.n] = r.capacity_general;
  if (by_n.size() < 2) return std::nullopt;

  const unsigned n_min = by_n.begin()->first;
  const unsigned n_max = by_n.rbegin()->first;
  const double c_max = by_n.rbegin()->second;

  auto ref = by_n.upper_bound(n_max / 2);
  if (ref == by_n.begin()) return std::nullopt;
  --ref;
  if (ref->first == n_max || std::abs(c_max - ref->second) > tol) return std::nullopt;

  // Values over the last quarter of the n range must also agree.
  const double quartile_start = n_min + 0.75 * (n_max - n_min);
  for (const auto& [n, value] : by_n)
    if (n >= quartile_start && std::abs(value - c_max) > tol) return std::nullopt;

  PhenomenonReport report;
  report.kind = PhenomenonKind::Frozen;
  report.location = n_max;
  report.value = c_max;
  for (const auto& [n, value] : by_n) report.evidence.emplace_back(n, value);
  return report;
}

}  // namespace qbcap
