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
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qbcap/crosscheck.hpp"

namespace qbcap::cli {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Largest deviation seen against the criterion's reference, if numeric.
  std::optional<double> max_deviation;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  /// Plants a wrong bf coefficient map so the crosscheck must fail.
  bool self_test = false;
  /// Criteria to run (1..10); empty means all.
  std::set<int> criteria;
};

inline constexpr int kCriterionCount = 10;

class Verifier {
 public:
  explicit Verifier(VerifyOptions options);

  CriterionResult run(int id);
  std::vector<CriterionResult> run_all();

  /// Shared by criteria 2 and 3; computed on first use.
  const CrosscheckReport& crosscheck();

 private:
  CriterionResult baseline();
  CriterionResult oracle();
  CriterionResult cptp();
  CriterionResult functional();
  CriterionResult sudden_death();
  CriterionResult adc_monotone();
  CriterionResult orderings();
  CriterionResult frozen();
  CriterionResult surfaces();
  CriterionResult determinism();

  VerifyOptions options_;
  std::optional<CrosscheckReport> crosscheck_;
  bool crosscheck_fast_ = true;
};

/// Deterministic text report: one line per criterion, then the crosscheck
/// categories, then a summary line.
std::string format_results(const std::vector<CriterionResult>& results,
                           const CrosscheckReport* crosscheck);

/// Runs the selected criteria, prints the report, returns 0 when all pass
/// and 1 otherwise.
int run_verify(const VerifyOptions& options, std::ostream& out);

}  // namespace qbcap::cli
