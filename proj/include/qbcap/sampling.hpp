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
#include <cstdint>
#include <random>

#include "qbcap/capacity.hpp"
#include "qbcap/linalg.hpp"
#include "qbcap/model.hpp"

namespace qbcap {

/// Seeded generator for every random draw in the library. Identical seeds
/// give identical streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0);
  double normal();
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

/// Uniform point on the probability 3-simplex.
std::array<double, 4> random_simplex_point(Rng& rng);

/// Uniform over the physical tetrahedron, via a uniform spectrum mapped back
/// through coefficients_from_spectrum.
BellCoefficients random_bell_coefficients(Rng& rng);

/// Rejection-sampled coefficients for which some ordering branch applies.
BellCoefficients random_branch_coefficients(Rng& rng);

/// G G† / tr(G G†) for a complex Gaussian 4x4 G.
ComplexMatrix random_density_matrix(Rng& rng);

/// Random Hermitian 4x4 with Gaussian entries.
ComplexMatrix random_hermitian(Rng& rng);

/// Haar-distributed n x n unitary: Gram-Schmidt QR of a complex Gaussian
/// matrix, with the phases of R's diagonal moved onto Q.
ComplexMatrix haar_unitary(Rng& rng, std::size_t n = 4);

/// εA >= εB >= 0 drawn from [0, 2).
BatteryHamiltonian random_hamiltonian(Rng& rng);

}  // namespace qbcap
