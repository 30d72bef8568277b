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

#include <stdexcept>
#include <string>

namespace qbcap {

// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class Unphysical : public Error {
 public:
  using Error::Error;
};

class NotBellDiagonal : public Error {
 public:
  using Error::Error;
};

class InvalidHamiltonian : public Error {
 public:
  using Error::Error;
};

class BranchNotApplicable : public Error {
 public:
  using Error::Error;
};

class OrderingAssumptionViolated : public Error {
 public:
  using Error::Error;
};

class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

class UnsupportedCombination : public Error {
 public:
  using Error::Error;
};

}  // namespace qbcap
