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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qbcap/capacity.hpp"
#include "qbcap/channels.hpp"
#include "qbcap/model.hpp"

namespace qbcap {

/// Closed and general capacities disagreeing by more than this set
/// SweepRecord::deviation_flag.
inline constexpr double kDeviationTolerance = 1e-10;
inline constexpr double kSuddenDeathTolerance = 1e-9;
inline constexpr double kFrozenTolerance = 1e-6;
/// Bisection stops once the bracketing interval is this narrow.
inline constexpr double kRootWidth = 1e-6;

struct SweepConfig {
  ChannelKind kind = ChannelKind::BitFlip;
  Sides sides = Sides::One;
  BellCoefficients c{0.5, 0.3, 0.1};
  BatteryHamiltonian h{0.6, 0.3};
  std::vector<double> p_grid;
  /// Required (nonempty) for two-sided sweeps, ignored otherwise.
  std::vector<double> q_grid;
  std::vector<unsigned> n_list{1};
};

struct SweepRecord {
  ChannelKind kind = ChannelKind::BitFlip;
  Sides sides = Sides::One;
  double p = 0.0;
  std::optional<double> q;
  unsigned n = 1;
  std::optional<double> capacity_closed;
  double capacity_general = 0.0;
  /// Numeric spectrum of the brute-force evolved state, ascending.
  std::array<double, 4> spectrum{};
  std::optional<OrderingBranch> branch_used;
  bool deviation_flag = false;
  /// Set when this grid point could not be evaluated.
  std::optional<std::string> error;
};

struct ClosedCapacity {
  double value = 0.0;
  /// The branch (or adc ordering form) whose precondition was verified;
  /// empty when `value` comes from the initial state's branch formula
  /// evaluated outside its precondition.
  std::optional<OrderingBranch> branch;
};

/// Closed-form capacity at one parameter point.
///
/// Bell-preserving channels: the branch formula of the branch applicable to
/// the mapped coefficients; otherwise the initial state's branch formula at
/// the mapped coefficients; otherwise nothing. adc: capacity_adc_closed, or
/// nothing when its ordering precondition fails.
std::optional<ClosedCapacity> closed_capacity(ChannelKind kind, Sides sides,
                                              const BellCoefficients& c,
                                              const BatteryHamiltonian& h, double p,
                                              std::optional<double> q, unsigned n);

/// State after n passes, by explicit Kraus operator sums starting from
/// bell_density(c).
TwoQubitState evolve_brute_force(ChannelKind kind, Sides sides, const BellCoefficients& c,
                                 double p, std::optional<double> q, unsigned n);

SweepRecord evaluate_point(const SweepConfig& config, double p, std::optional<double> q,
                           unsigned n);

/// Validates the grids (nonempty, ascending, within [0, 1]); throws
/// ParameterOutOfRange or UnsupportedCombination.
void validate(const SweepConfig& config);

/// One record per grid point, row-major over p, then q, then n. Per-point
/// failures are recorded in SweepRecord::error rather than thrown.
std::vector<SweepRecord> sweep(const SweepConfig& config);

enum class PhenomenonKind { SuddenDeath, Frozen };

struct PhenomenonReport {
  PhenomenonKind kind = PhenomenonKind::SuddenDeath;
  /// Root in p (sudden death) or the largest n (frozen).
  double location = 0.0;
  /// Capacity at the location.
  double value = 0.0;
  /// (parameter, capacity) pairs around the location.
  std::vector<std::pair<double, double>> evidence;
  /// Sudden death only: whether capacity_general also stays <= tol beyond
  /// the root, and its largest value there.
  bool general_stays_below = true;
  double max_general_beyond = 0.0;
};

/// Scans a 1-D p sweep for the first point whose capacity (closed form when
/// present, general otherwise) is <= tol, then bisects `refine` on the
/// bracketing grid interval to width kRootWidth.
std::optional<PhenomenonReport> detect_sudden_death(std::span<const SweepRecord> records,
                                                    double tol,
                                                    const std::function<double(double)>& refine);

/// Builds the closed-or-general capacity function of p used to refine roots.
std::function<double(double)> capacity_of_p(const SweepConfig& config, std::optional<double> q,
                                            unsigned n);

/// Compares capacity_general at the largest n with the largest listed
/// n <= n_max / 2; reports the n_max value when they agree within tol.
std::optional<PhenomenonReport> detect_frozen(std::span<const SweepRecord> records, double tol);

}  // namespace qbcap
