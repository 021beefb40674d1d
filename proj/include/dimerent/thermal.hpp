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
 * Thermal equilibrium state rho = exp(-H/T) / Z of the dimer.
 *
 * The closed forms are evaluated in shifted-exponent form: every Boltzmann
 * exponent has the largest one subtracted before exponentiation, so the
 * density matrix stays finite for T far below |J| and |B| (exponents of
 * several thousand are routine at J = -136 K).
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dimerent/dimer_model.hpp"
#include "dimerent/errors.hpp"
#include "dimerent/smalllin.hpp"

namespace dimerent {

/// Temperature in Kelvin, strictly positive. T = 0 is handled by the
/// dedicated limit functions in entanglement.hpp.
struct ThermalPoint {
  double t_kelvin = 1.0;

  ThermalPoint() = default;
  explicit ThermalPoint(double t) : t_kelvin(t) {
    if (!(t > 0.0) || !std::isfinite(t))
      throw std::invalid_argument("ThermalPoint: temperature must be finite and > 0");
  }
};

/// Two-qubit density matrix with the X structure of a dimer in a z field:
/// nonzero entries only on the diagonal and at (1,2)/(2,1).
class DensityMatrix {
 public:
  static constexpr double kTraceTolerance = 1e-12;
  static constexpr double kPsdTolerance = 1e-12;

  static DensityMatrix from_elements(double r11, double r22, double r33, double r44, double r23) {
    Matrix4 m{};
    m[0][0] = r11;
    m[1][1] = r22;
    m[2][2] = r33;
    m[3][3] = r44;
    m[1][2] = m[2][1] = r23;
    return from_matrix(SymMatrix4(m));
  }

  /// Throws NonPhysicalState unless m has X structure, unit trace and is PSD.
  static DensityMatrix from_matrix(const SymMatrix4& m) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        if ((i != 1 || j != 2) && m(i, j) != 0.0) {
          std::ostringstream msg;
          msg << "DensityMatrix: entry (" << i << "," << j << ") = " << m(i, j)
              << " breaks the dimer X structure";
          throw NonPhysicalState(msg.str());
        }
      }
    }
    const double tr = m.trace();
    if (std::abs(tr - 1.0) > kTraceTolerance) {
      std::ostringstream msg;
      msg << "DensityMatrix: trace " << tr << " differs from 1";
      throw NonPhysicalState(msg.str());
    }
    const double a = m(1, 1);
    const double d = m(2, 2);
    const double c = m(1, 2);
    const double central_min = 0.5 * (a + d - std::sqrt((a - d) * (a - d) + 4.0 * c * c));
    const double lowest = std::min({m(0, 0), m(3, 3), central_min});
    if (lowest < -kPsdTolerance) {
      std::ostringstream msg;
      msg << "DensityMatrix: negative eigenvalue " << lowest;
      throw NonPhysicalState(msg.str());
    }
    DensityMatrix out;
    out.m_ = m;
    return out;
  }

  double rho11() const { return m_(0, 0); }
  double rho22() const { return m_(1, 1); }
  double rho33() const { return m_(2, 2); }
  double rho44() const { return m_(3, 3); }
  double rho23() const { return m_(1, 2); }

  const SymMatrix4& matrix() const { return m_; }

 private:
  DensityMatrix() = default;
  SymMatrix4 m_;
};

/// Partition function as exp(shift) * scaled_sum; scaled_sum lies in [1, 4].
struct LogPartition {
  double shift = 0.0;
  double scaled_sum = 1.0;

  double log_value() const { return shift + std::log(scaled_sum); }
  /// Linear value; +inf once exp(shift) leaves double range.
  double value() const { return std::exp(shift) * scaled_sum; }
};

namespace detail {

// Boltzmann exponents -E_i/T in the order up-up, down-down, triplet m=0, singlet.
struct BoltzmannExponents {
  double up_up;
  double down_down;
  double triplet0;
  double singlet;

  double max() const { return std::max({up_up, down_down, triplet0, singlet}); }
};

inline BoltzmannExponents boltzmann_exponents(const DimerParams& p, const FieldSpec& f,
                                              const ThermalPoint& t) {
  const double j = p.j_kelvin;
  const double b = f.b_kelvin;
  const double tk = t.t_kelvin;
  return {(j / 4.0 + b) / tk, (j / 4.0 - b) / tk, j / (4.0 * tk), -3.0 * j / (4.0 * tk)};
}

// exp(x - c) - exp(y - c) without cancellation blow-up or inf * 0.
inline double shifted_exp_difference(double x, double y, double c) {
  if (x >= y) return -std::exp(x - c) * std::expm1(y - x);
  return std::exp(y - c) * std::expm1(x - y);
}

}  // namespace detail

inline LogPartition partition_function_log(const DimerParams& p, const FieldSpec& f,
                                           const ThermalPoint& t) {
  const auto x = detail::boltzmann_exponents(p, f, t);
  const double c = x.max();
  const double s = std::exp(x.up_up - c) + std::exp(x.down_down - c) + std::exp(x.triplet0 - c) +
                   std::exp(x.singlet - c);
  return {c, s};
}

/// Z(J, B, T). See LogPartition::value for the overflow behaviour.
inline double partition_function(const DimerParams& p, const FieldSpec& f, const ThermalPoint& t) {
  return partition_function_log(p, f, t).value();
}

/// Closed-form thermal state:
///   rho11 = e^{J/4T + B/T} / Z,   rho44 = e^{J/4T - B/T} / Z,
///   rho22 = rho33 = e^{-J/4T} cosh(J/2T) / Z,
///   rho23 = rho32 = e^{-J/4T} sinh(J/2T) / Z.
inline DensityMatrix density_closed_form(const DimerParams& p, const FieldSpec& f,
                                         const ThermalPoint& t) {
  const auto x = detail::boltzmann_exponents(p, f, t);
  const double c = x.max();
  const double w11 = std::exp(x.up_up - c);
  const double w44 = std::exp(x.down_down - c);
  const double wt = std::exp(x.triplet0 - c);
  const double ws = std::exp(x.singlet - c);
  const double s = w11 + w44 + wt + ws;

  const double diag_central = 0.5 * (wt + ws) / s;
  const double coherence = 0.5 * detail::shifted_exp_difference(x.triplet0, x.singlet, c) / s;
  return DensityMatrix::from_elements(w11 / s, diag_central, diag_central, w44 / s, coherence);
}

/// exp(-H/T) / Tr exp(-H/T) by numerical diagonalization. Shares nothing
/// with the closed forms above; used as their oracle.
inline SymMatrix4 gibbs_oracle(const SymMatrix4& h, const ThermalPoint& t) {
  const Spectrum4 spec = eig_sym(h);
  const double lowest = spec.eigenvalues[0];
  const double tk = t.t_kelvin;
  const SymMatrix4 unnormalized =
      func_sym(h, [lowest, tk](double e) { return std::exp(-(e - lowest) / tk); });
  double z = 0.0;
  for (double e : spec.eigenvalues) z += std::exp(-(e - lowest) / tk);
  return (1.0 / z) * unnormalized;
}

}  // namespace dimerent
