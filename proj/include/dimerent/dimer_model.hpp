// Copyright 2026 The dimerent Authors
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

/** @file
 * Spin-1/2 Heisenberg dimer in a field along z:
 *
 *   H = -J S1.S2 - g mu_B B (S1^z + S2^z)
 *
 * All energies are reduced to Kelvin: j_kelvin = J/k_B and
 * b_kelvin = g mu_B B / k_B. With this sign convention j_kelvin < 0 is
 * antiferromagnetic and j_kelvin > 0 ferromagnetic.
 *
 * Basis order is |up,up>, |up,down>, |down,up>, |down,down> (index 0..3).
 */

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dimerent/smalllin.hpp"

namespace dimerent {

/// Physical constants (CODATA).
struct PhysicalConstants {
  /// Bohr magneton over Boltzmann constant, Kelvin per Tesla.
  static constexpr double mu_b_over_k_b = 0.67171381563;
};

/// Intrinsic material parameters.
struct DimerParams {
  double j_kelvin = 0.0;
  double g_factor = 2.0;

  DimerParams() = default;
  explicit DimerParams(double j, double g = 2.0) : j_kelvin(j), g_factor(g) {
    if (!std::isfinite(j)) throw std::invalid_argument("DimerParams: j_kelvin must be finite");
    if (!(g > 0.0) || !std::isfinite(g))
      throw std::invalid_argument("DimerParams: g_factor must be finite and > 0");
  }

  bool antiferromagnetic() const { return j_kelvin < 0.0; }
};

/// Reduced field along z in Kelvin; the sign is the orientation.
struct FieldSpec {
  double b_kelvin = 0.0;

  FieldSpec() = default;
  explicit FieldSpec(double b) : b_kelvin(b) {
    if (!std::isfinite(b)) throw std::invalid_argument("FieldSpec: b_kelvin must be finite");
  }
};

inline double tesla_to_kelvin(double b_tesla, double g = 2.0) {
  if (!std::isfinite(b_tesla) || !(g > 0.0))
    throw std::invalid_argument("tesla_to_kelvin: need finite field and g > 0");
  return g * PhysicalConstants::mu_b_over_k_b * b_tesla;
}

inline double kelvin_to_tesla(double b_kelvin, double g = 2.0) {
  if (!std::isfinite(b_kelvin) || !(g > 0.0))
    throw std::invalid_argument("kelvin_to_tesla: need finite field and g > 0");
  return b_kelvin / (g * PhysicalConstants::mu_b_over_k_b);
}

/// Hamiltonian matrix in Kelvin, filled directly:
///   diag(-J/4 - B, J/4, J/4, -J/4 + B), with -J/2 on the (1,2)/(2,1) pair.
inline SymMatrix4 build_hamiltonian(const DimerParams& p, const FieldSpec& f) {
  const double j = p.j_kelvin;
  const double b = f.b_kelvin;
  Matrix4 h{};
  h[0][0] = -j / 4.0 - b;
  h[1][1] = j / 4.0;
  h[2][2] = j / 4.0;
  h[3][3] = -j / 4.0 + b;
  h[1][2] = h[2][1] = -j / 2.0;
  return SymMatrix4(h);
}

/// Closed-form eigenvalues, ascending: triplet m=+1/-1 (-J/4 -+ B),
/// triplet m=0 (-J/4) and singlet (3J/4).
inline Vector4 analytic_spectrum(const DimerParams& p, const FieldSpec& f) {
  const double j = p.j_kelvin;
  const double b = f.b_kelvin;
  Vector4 e{-j / 4.0 - b, -j / 4.0 + b, -j / 4.0, 3.0 * j / 4.0};
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace dimerent
