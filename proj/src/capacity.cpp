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

#include "qbcap/capacity.hpp"

#include <algorithm>
#include <sstream>

#include "qbcap/channels.hpp"
#include "qbcap/errors.hpp"

namespace qbcap {

std::string_view to_string(OrderingBranch branch) {
  switch (branch) {
    case OrderingBranch::B123: return "123";
    case OrderingBranch::B132: return "132";
    case OrderingBranch::B213: return "213";
    case OrderingBranch::B231: return "231";
    case OrderingBranch::B312: return "312";
    case OrderingBranch::B321: return "321";
  }
  return "?";
}

std::optional<OrderingBranch> parse_branch(std::string_view tag) {
  for (OrderingBranch b : kAllBranches)
    if (to_string(b) == tag) return b;
  return std::nullopt;
}

std::array<int, 3> branch_indices(OrderingBranch branch) {
  const auto tag = to_string(branch);
  return {tag[0] - '1', tag[1] - '1', tag[2] - '1'};
}

bool applies(OrderingBranch branch, const BellCoefficients& c) {
  const auto [a, b, k] = branch_indices(branch);
  return c[a] > c[b] && c[b] > c[k] && c[k] > 0.0;
}

std::optional<OrderingBranch> select_branch(const BellCoefficients& c) {
  for (OrderingBranch b : kAllBranches)
    if (applies(b, c)) return b;
  return std::nullopt;
}

double capacity_from_spectrum(std::array<double, 4> lambda, const BatteryHamiltonian& h) {
  for (double& l : lambda)
    if (l < 0.0 && l >= -kPhysicalTolerance) l = 0.0;
  std::stable_sort(lambda.begin(), lambda.end());
  const auto eps = h.eigenenergies_ascending();
  double sum = 0.0;
  for (std::size_t i = 0; i < 4; ++i) sum += eps[i] * (lambda[i] - lambda[3 - i]);
  return sum;
}

double capacity_general(const TwoQubitState& rho, const BatteryHamiltonian& h) {
  return capacity_from_spectrum(hermitian_eigenvalues_ascending(rho.matrix()), h);
}

double branch_formula(const BellCoefficients& c, const BatteryHamiltonian& h,
                      OrderingBranch branch) {
  const auto [a, b, k] = branch_indices(branch);
  (void)k;
  return (c[a] + c[b]) * (h.eps_a() + h.eps_b()) + (c[a] - c[b]) * (h.eps_a() - h.eps_b());
}

double capacity_branch(const BellCoefficients& c, const BatteryHamiltonian& h,
                       OrderingBranch branch) {
  if (!applies(branch, c)) {
    std::ostringstream msg;
    msg << "branch " << to_string(branch) << " does not apply to c = (" << c.c1 << ", " << c.c2
        << ", " << c.c3 << ")";
    throw BranchNotApplicable(msg.str());
  }
  return branch_formula(c, h, branch);
}

double capacity(const BellCoefficients& c, const BatteryHamiltonian& h) {
  if (auto branch = select_branch(c)) return capacity_branch(c, h, *branch);
  return capacity_general(bell_density(c), h);
}

AdcClosedCapacity capacity_adc_closed(const BellCoefficients& c, const BatteryHamiltonian& h,
                                      double p, unsigned n) {
  const AdcSpectrum s = adc_spectrum(c, p, n);
  const double sum_e = h.eps_a() + h.eps_b();
  const double diff_e = h.eps_a() - h.eps_b();
  // 2(u1 - u0) and 2(u3 - u2) are the two square roots of the closed forms.
  const double root_a = 2.0 * s.u1_minus_u0;
  const double root_b = 2.0 * s.u3_minus_u2;
  if (s.ordered_0231()) return {sum_e * root_a + diff_e * root_b, OrderingBranch::B123};
  if (s.ordered_0213()) {
    const double c3x = c.c3 * ipow(1.0 - p, n);
    return {0.5 * (2.0 * c3x + root_b + root_a) * sum_e +
                0.5 * (-2.0 * c3x + root_a + root_b) * diff_e,
            OrderingBranch::B231};
  }
  std::ostringstream msg;
  msg << "amplitude-damping spectrum at p = " << p << ", n = " << n
      << " matches neither u0<=u2<=u3<=u1 nor u0<=u2<=u1<=u3";
  throw OrderingAssumptionViolated(msg.str());
}

}  // namespace qbcap
