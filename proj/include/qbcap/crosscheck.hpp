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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qbcap/channels.hpp"
#include "qbcap/linalg.hpp"
#include "qbcap/model.hpp"
#include "qbcap/sampling.hpp"

namespace qbcap {

inline constexpr double kClosedFormTolerance = 1e-12;
inline constexpr double kSpectrumTolerance = 1e-10;
inline constexpr double kHermiticityTolerance = 1e-12;
inline constexpr double kPositivityTolerance = 1e-10;

struct DeviationStat {
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;
  /// Reported but excluded from the pass/fail decision.
  bool informational = false;

  bool passed() const { return informational || max_deviation <= tolerance; }
};

struct CrosscheckReport {
  std::map<std::string, DeviationStat> categories;

  void record(const std::string& category, double deviation, double tolerance,
              bool informational = false);
  bool passed() const;
  /// Names of failing categories whose name starts with `prefix`.
  std::vector<std::string> failures(const std::string& prefix = "") const;
  /// Largest deviation over non-informational categories starting with `prefix`.
  double max_deviation(const std::string& prefix) const;
};

using CoeffMapFn = std::function<BellCoefficients(ChannelKind, const BellCoefficients&, double,
                                                  std::optional<double>, unsigned, Sides)>;

/// One random comparison point. Every channel kind is checked at both n = 1
/// and n = `passes`.
struct CrosscheckTuple {
  BellCoefficients c;
  BatteryHamiltonian h{0.6, 0.3};
  double p = 0.0;
  double q = 0.0;
  unsigned passes = 1;
  /// Generic (not Bell-diagonal) state for the trace/positivity checks.
  ComplexMatrix general_state = ComplexMatrix::identity(4) * Complex{0.25};
};

CrosscheckTuple random_tuple(Rng& rng);

void crosscheck_tuple(const CrosscheckTuple& t, CrosscheckReport& report,
                      const CoeffMapFn& map = coeff_map);

/// Closed forms against brute-force Kraus evolution over `trials` seeded
/// random tuples. Categories: table2.*, table3.* (one-sided n = 1 / n > 1),
/// table5.*, table6.* (two-sided), table2.both_qubits.*, adc.matrix,
/// adc.spectrum, capacity.branch, capacity.adc_closed, cptp.*, and the
/// informational diagnostic.table2_literal_one_sided.*.
CrosscheckReport oracle_crosscheck(std::uint64_t seed, std::size_t trials,
                                   const CoeffMapFn& map = coeff_map);

/// One line per category, in name order.
std::string format_report(const CrosscheckReport& report);

}  // namespace qbcap
