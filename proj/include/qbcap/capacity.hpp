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
#include <optional>
#include <string_view>

#include "qbcap/model.hpp"

namespace qbcap {

/// Strict ordering c_a > c_b > c_c > 0 of the correlation coefficients.
enum class OrderingBranch { B123, B132, B213, B231, B312, B321 };

inline constexpr std::array<OrderingBranch, 6> kAllBranches = {
    OrderingBranch::B123, OrderingBranch::B132, OrderingBranch::B213,
    OrderingBranch::B231, OrderingBranch::B312, OrderingBranch::B321};

/// "123", "132", ...
std::string_view to_string(OrderingBranch branch);
std::optional<OrderingBranch> parse_branch(std::string_view tag);

/// Zero-based coefficient indices (a, b, c) of the chain c_a > c_b > c_c.
std::array<int, 3> branch_indices(OrderingBranch branch);

bool applies(OrderingBranch branch, const BellCoefficients& c);

/// The unique applicable branch when all c_i > 0 and pairwise distinct.
std::optional<OrderingBranch> select_branch(const BellCoefficients& c);

/// Σ ε_i (λ_i - λ_{3-i}) with both lists ascending. Entries of `lambda` in
/// [-1e-10, 0) are clamped to 0 before a stable sort; the result itself is
/// never clamped.
double capacity_from_spectrum(std::array<double, 4> lambda, const BatteryHamiltonian& h);

double capacity_general(const TwoQubitState& rho, const BatteryHamiltonian& h);

/// (c_a + c_b)(εA + εB) + (c_a - c_b)(εA - εB) for the branch's two leading
/// coefficients, evaluated without checking that the branch applies.
double branch_formula(const BellCoefficients& c, const BatteryHamiltonian& h,
                      OrderingBranch branch);

/// branch_formula guarded by applies(); throws BranchNotApplicable.
double capacity_branch(const BellCoefficients& c, const BatteryHamiltonian& h,
                       OrderingBranch branch);

/// Capacity of a Bell-diagonal state: closed form when a branch applies,
/// otherwise the general definition on bell_density(c).
double capacity(const BellCoefficients& c, const BatteryHamiltonian& h);

struct AdcClosedCapacity {
  double value = 0.0;
  /// B123 for the u0 <= u2 <= u3 <= u1 form, B231 for u0 <= u2 <= u1 <= u3.
  OrderingBranch form = OrderingBranch::B123;
};

/// Closed-form capacity of the n-pass amplitude-damping output. The
/// eigenvalue ordering is checked from the closed-form spectrum; throws
/// OrderingAssumptionViolated when neither supported ordering holds.
AdcClosedCapacity capacity_adc_closed(const BellCoefficients& c, const BatteryHamiltonian& h,
                                      double p, unsigned n);

}  // namespace qbcap
