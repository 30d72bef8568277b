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

#include "qbcap/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace qbcap {

double Rng::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double Rng::normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

std::size_t Rng::index(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
}

std::array<double, 4> random_simplex_point(Rng& rng) {
  // Normalized exponentials are Dirichlet(1,1,1,1).
  std::array<double, 4> e{};
  double total = 0.0;
  for (double& v : e) {
    v = -std::log1p(-rng.uniform());
    total += v;
  }
  for (double& v : e) v /= total;
  return e;
}

BellCoefficients random_bell_coefficients(Rng& rng) {
  return coefficients_from_spectrum(random_simplex_point(rng));
}

BellCoefficients random_branch_coefficients(Rng& rng) {
  for (;;) {
    const BellCoefficients c = random_bell_coefficients(rng);
    if (select_branch(c)) return c;
  }
}

ComplexMatrix random_density_matrix(Rng& rng) {
  ComplexMatrix g(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) g(r, c) = Complex{rng.normal(), rng.normal()};
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  // Remove rounding asymmetry so the state is exactly Hermitian.
  return 0.5 * (rho + rho.adjoint());
}

ComplexMatrix random_hermitian(Rng& rng) {
  ComplexMatrix m(4, 4);
  for (std::size_t r = 0; r < 4; ++r) {
    m(r, r) = rng.normal();
    for (std::size_t c = r + 1; c < 4; ++c) {
      m(r, c) = Complex{rng.normal(), rng.normal()};
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

ComplexMatrix haar_unitary(Rng& rng, std::size_t n) {
  ComplexMatrix z(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      z(r, c) = Complex{rng.normal(), rng.normal()} / std::sqrt(2.0);

  // Modified Gram-Schmidt on the columns; R's diagonal is real positive here,
  // which is the phase-fixed QR Haar measure requires.
  ComplexMatrix q = z;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex dot = 0.0;
      for (std::size_t r = 0; r < n; ++r) dot += std::conj(q(r, k)) * q(r, j);
      for (std::size_t r = 0; r < n; ++r) q(r, j) -= dot * q(r, k);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm += std::norm(q(r, j));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < n; ++r) q(r, j) /= norm;
  }
  return q;
}

BatteryHamiltonian random_hamiltonian(Rng& rng) {
  double a = rng.uniform(0.0, 2.0);
  double b = rng.uniform(0.0, 2.0);
  if (a < b) std::swap(a, b);
  return BatteryHamiltonian(a, b);
}

}  // namespace qbcap
