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
 * Brute-force verifiers for the entanglement closed forms.
 *
 * This header deliberately does not include entanglement.hpp: the only
 * shared types are DensityMatrix and the generic linear algebra.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dimerent/errors.hpp"
#include "dimerent/smalllin.hpp"
#include "dimerent/thermal.hpp"

namespace dimerent::oracle {

struct GridMinResult {
  double argmin_rho23 = 0.0;
  double min_distance = 0.0;
};

/// Scans the separable coherence interval [-sqrt(rho11 rho44), 0] at the
/// centres of n_points equal cells and returns the candidate closest to
/// rho23 together with its Hilbert-Schmidt distance sqrt(2)|rho23 - c|.
/// The argmin is within half a cell of the true minimizer.
inline GridMinResult grid_min_distance(const DensityMatrix& rho, std::size_t n_points) {
  if (n_points < 1000) throw std::invalid_argument("grid_min_distance: need n_points >= 1000");
  const double edge = std::sqrt(rho.rho11() * rho.rho44());
  const double target = rho.rho23();
  if (!(target < 0.0 && target * target > rho.rho11() * rho.rho44())) {
    throw SeparableStateError("grid_min_distance: state is not entangled");
  }
  const double step = edge / static_cast<double>(n_points);
  GridMinResult best{0.0, HUGE_VAL};
  for (std::size_t k = 0; k < n_points; ++k) {
    const double candidate = -edge + (static_cast<double>(k) + 0.5) * step;
    const double dist = std::numbers::sqrt2 * std::abs(target - candidate);
    if (dist < best.min_distance) best = {candidate, dist};
  }
  return best;
}

namespace detail {

inline void require_physical(const SymMatrix4& rho, const Spectrum4& spec) {
  const double tr = rho.trace();
  if (std::abs(tr - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "concurrence: trace " << tr << " differs from 1";
    throw NonPhysicalState(msg.str());
  }
  if (spec.eigenvalues[0] < -1e-12) {
    std::ostringstream msg;
    msg << "concurrence: negative eigenvalue " << spec.eigenvalues[0];
    throw NonPhysicalState(msg.str());
  }
}

}  // namespace detail

/// Wootters concurrence C = max(0, s1 - s2 - s3 - s4), with s_i the square
/// roots of the eigenvalues of rho * rho~ (rho~ = Y rho Y, Y = sigma^y (x)
/// sigma^y; rho is real) in decreasing order.
///
/// The s_i are obtained as the singular values of tau = W^T Y W where
/// rho = W W^T, W = V diag(sqrt(p)). tau^T tau = W^T Y rho Y W is similar to
/// rho~ rho, so its eigenvalues are those of rho rho~. Working with tau
/// avoids taking square roots of the tiny eigenvalues of rho rho~ itself,
/// which would cost half the significant digits for near-pure states.
inline double concurrence(const SymMatrix4& rho) {
  const Spectrum4 spec = eig_sym(rho);
  detail::require_physical(rho, spec);

  Matrix4 w{};
  for (std::size_t k = 0; k < 4; ++k) {
    const double amp = std::sqrt(std::max(0.0, spec.eigenvalues[k]));
    for (std::size_t i = 0; i < 4; ++i) w[i][k] = spec.eigenvectors[k][i] * amp;
  }
  const Matrix4 tau = matmul(transpose(w), matmul(sigma_yy(), w));
  const Spectrum4 tau_spec = eig_sym(SymMatrix4(tau));

  std::array<double, 4> s{};
  for (std::size_t k = 0; k < 4; ++k) s[k] = std::abs(tau_spec.eigenvalues[k]);
  std::sort(s.begin(), s.end(), std::greater<>());
  return std::max(0.0, s[0] - s[1] - s[2] - s[3]);
}

inline double concurrence(const DensityMatrix& rho) { return concurrence(rho.matrix()); }

}  // namespace dimerent::oracle
