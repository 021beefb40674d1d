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
 * Thermal entanglement of the spin-1/2 dimer.
 *
 * Separability is decided with the partial-transpose (PPT) criterion, which
 * is exact for two qubits. The entanglement measure is the Hilbert-Schmidt
 * distance from the thermal state to the closest separable state of the
 * same X family, normalized to [0, 1]:
 *
 *   E(rho) = max[0, -2 (rho23 + sqrt(rho11 rho44))]
 *
 * which for the thermal state reduces to
 *
 *   E(J, B, T) = max[0, e^{-3J/4T} (1 - 3 e^{J/T}) / Z(J, B, T)].
 *
 * The sign of 1 - 3 e^{J/T} alone decides entanglement, so the decoherence
 * temperature T_c = -J / ln 3 does not depend on the field.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dimerent/dimer_model.hpp"
#include "dimerent/errors.hpp"
#include "dimerent/smalllin.hpp"
#include "dimerent/thermal.hpp"

namespace dimerent {

/// Normalization constant of the distance measure.
inline constexpr double kMeasureNormalization = std::numbers::sqrt2;

/// Half-width of the band around zero inside which a computed measure is
/// snapped to exactly 0 (relative to the magnitude of the summed terms for
/// the closed forms, absolute for the element formula).
inline constexpr double kZeroBand = 1e-12;

/// is_separable() accepts lambda4 down to this value.
inline constexpr double kSeparableTolerance = 1e-14;

enum class Regime { FerromagneticSeparable, WeakField, MediumField, StrongField };

inline std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::FerromagneticSeparable:
      return "ferromagnetic-separable";
    case Regime::WeakField:
      return "weak-field";
    case Regime::MediumField:
      return "medium-field";
    case Regime::StrongField:
      return "strong-field";
  }
  return "unknown";
}

/// Eigenvalues of the partial transpose. lambda4 is the only one that can
/// become negative.
struct PtSpectrum {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;
  double lambda4 = 0.0;
};

struct EntanglementResult {
  double value = 0.0;
  Regime regime = Regime::FerromagneticSeparable;
  std::optional<double> t_c_kelvin;
  bool entangled = false;
};

// ---------------------------------------------------------------------------
// Partial transpose and PPT
// ---------------------------------------------------------------------------

/// Transpose over the second tensor factor:
/// out[2i+k][2j+l] = m[2i+l][2j+k].
inline SymMatrix4 partial_transpose(const SymMatrix4& m) {
  Matrix4 out{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out[2 * i + k][2 * j + l] = m(2 * i + l, 2 * j + k);
  return SymMatrix4(out);
}

inline SymMatrix4 partial_transpose(const DensityMatrix& rho) {
  return partial_transpose(rho.matrix());
}

/// lambda1 = rho22, lambda2 = rho33,
/// lambda3,4 = (rho11 + rho44 +- sqrt((rho11 - rho44)^2 + 4 rho23^2)) / 2.
/// lambda4 is taken from lambda3 * lambda4 = rho11 rho44 - rho23^2, which
/// is free of the cancellation in the minus branch.
inline PtSpectrum pt_spectrum(const DensityMatrix& rho) {
  const double a = rho.rho11();
  const double d = rho.rho44();
  const double c = rho.rho23();
  PtSpectrum s;
  s.lambda1 = rho.rho22();
  s.lambda2 = rho.rho33();
  s.lambda3 = 0.5 * (a + d + std::sqrt((a - d) * (a - d) + 4.0 * c * c));
  s.lambda4 = s.lambda3 > 0.0 ? (a * d - c * c) / s.lambda3 : 0.0;
  return s;
}

inline bool is_separable(const DensityMatrix& rho) {
  return pt_spectrum(rho).lambda4 >= -kSeparableTolerance;
}

/// sign * exp(log_abs); sign is -1, 0 or +1.
struct SignedLog {
  int sign = 0;
  double log_abs = -HUGE_VAL;
};

/// lambda4 of the thermal state in log form. Exact sign and a finite
/// magnitude even where lambda4 itself underflows (deep in the strong-field
/// low-T corner lambda4 ~ e^{-2|B|/T}).
///
/// Uses lambda4 = rho11 rho44 (1 - r) / lambda3 with
/// r = rho23^2 / (rho11 rho44) = (1 - u)^2 / 4, u = e^{-J/T}, so that
/// 1 - r = (1 + u)(3 - u) / 4.
inline SignedLog lambda4_signed_log(const DimerParams& p, const FieldSpec& f,
                                    const ThermalPoint& t) {
  const double j_over_t = p.j_kelvin / t.t_kelvin;
  const double log_z = partition_function_log(p, f, t).log_value();
  const double log_rho11_rho44 = j_over_t / 2.0 - 2.0 * log_z;

  // log(1 + u) and log|3 - u| without forming u when it would overflow.
  double log_one_plus_u;
  double log_three_minus_u;
  int sign;
  if (j_over_t >= 0.0) {
    const double u = std::exp(-j_over_t);
    log_one_plus_u = std::log1p(u);
    log_three_minus_u = std::log(3.0 - u);
    sign = 1;
  } else {
    const double inv_u = std::exp(j_over_t);  // e^{J/T} < 1
    log_one_plus_u = -j_over_t + std::log1p(inv_u);
    const double w = 1.0 - 3.0 * inv_u;  // (u - 3) / u
    if (w == 0.0) return {0, -HUGE_VAL};
    sign = w > 0.0 ? -1 : 1;
    log_three_minus_u = -j_over_t + std::log(std::abs(w));
  }

  const double lambda3 = pt_spectrum(density_closed_form(p, f, t)).lambda3;
  const double log_abs = log_rho11_rho44 + log_one_plus_u + log_three_minus_u - std::log(4.0) -
                         std::log(lambda3);
  return {sign, log_abs};
}

// ---------------------------------------------------------------------------
// Decoherence temperature and regimes
// ---------------------------------------------------------------------------

/// T_c = -J / ln 3 for antiferromagnetic coupling; none otherwise.
inline std::optional<double> critical_temperature(const DimerParams& p) {
  if (p.j_kelvin < 0.0) return -p.j_kelvin / std::log(3.0);
  return std::nullopt;
}

inline Regime classify_regime(const DimerParams& p, const FieldSpec& f) {
  if (p.j_kelvin >= 0.0) return Regime::FerromagneticSeparable;
  const double abs_j = std::abs(p.j_kelvin);
  const double abs_b = std::abs(f.b_kelvin);
  if (std::abs(abs_b - abs_j) <= 1e-12 * abs_j) return Regime::MediumField;
  return abs_b < abs_j ? Regime::WeakField : Regime::StrongField;
}

/// lim_{T->0} E: 1 (weak), 1/2 (medium), 0 (strong or ferromagnetic).
/// Follows from the dominant exponent of the ratio form: the ground state is
/// the singlet for |B| < |J|, an equal singlet/|up,up> mixture at |B| = |J|
/// and the fully polarized product state beyond.
inline double zero_t_limit(const DimerParams& p, const FieldSpec& f) {
  switch (classify_regime(p, f)) {
    case Regime::WeakField:
      return 1.0;
    case Regime::MediumField:
      return 0.5;
    case Regime::StrongField:
    case Regime::FerromagneticSeparable:
      return 0.0;
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Distance measure
// ---------------------------------------------------------------------------

/// Hilbert-Schmidt distance between two members of the same X family
/// (identical diagonals): sqrt(2) |rho23_a - rho23_b|.
inline double hs_distance(const DensityMatrix& a, const DensityMatrix& b) {
  constexpr double tol = 1e-14;
  if (std::abs(a.rho11() - b.rho11()) > tol || std::abs(a.rho22() - b.rho22()) > tol ||
      std::abs(a.rho33() - b.rho33()) > tol || std::abs(a.rho44() - b.rho44()) > tol) {
    throw std::invalid_argument("hs_distance: states must share their diagonal");
  }
  return std::numbers::sqrt2 * std::abs(a.rho23() - b.rho23());
}

/// rho23 of the separable state nearest to an entangled rho:
/// -sqrt(rho11 rho44), the edge of the separable interval.
inline double closest_separable_rho23(const DensityMatrix& rho) {
  const double edge = std::sqrt(rho.rho11() * rho.rho44());
  if (!(rho.rho23() < -edge)) {
    std::ostringstream msg;
    msg << "closest_separable_rho23: state is not entangled with rho23 < 0 (rho23 = "
        << rho.rho23() << ", sqrt(rho11 rho44) = " << edge << ")";
    throw SeparableStateError(msg.str());
  }
  return -edge;
}

namespace detail {

inline double clamp_measure(double raw, double scale) {
  if (std::abs(raw) <= kZeroBand * scale) return 0.0;
  if (raw > 1.0 + kZeroBand) {
    std::ostringstream msg;
    msg << "entanglement measure evaluated to " << raw << " > 1";
    throw InternalError(msg.str());
  }
  return std::clamp(raw, 0.0, 1.0);
}

}  // namespace detail

/// E = max[0, -2 (rho23 + sqrt(rho11 rho44))] from the matrix elements.
inline double measure_from_state(const DensityMatrix& rho) {
  const double raw = -2.0 * (rho.rho23() + std::sqrt(rho.rho11() * rho.rho44()));
  return detail::clamp_measure(raw, 1.0);
}

/// Unclamped e^{-3J/4T} (1 - 3 e^{J/T}) / Z: positive below T_c, negative
/// above. Evaluated as (e^{-3J/4T} - 3 e^{J/4T}) / Z in shifted form.
inline double signed_measure(const DimerParams& p, const FieldSpec& f, const ThermalPoint& t) {
  const auto x = detail::boltzmann_exponents(p, f, t);
  const auto z = partition_function_log(p, f, t);
  return (std::exp(x.singlet - z.shift) - 3.0 * std::exp(x.triplet0 - z.shift)) / z.scaled_sum;
}

/// Measure through the partition function: max[0, e^{-3J/4T}(1 - 3e^{J/T}) / Z].
inline double measure_partition_form(const DimerParams& p, const FieldSpec& f,
                                     const ThermalPoint& t) {
  const auto x = detail::boltzmann_exponents(p, f, t);
  const auto z = partition_function_log(p, f, t);
  const double pos = std::exp(x.singlet - z.shift);
  const double neg = 3.0 * std::exp(x.triplet0 - z.shift);
  return detail::clamp_measure((pos - neg) / z.scaled_sum, (pos + neg) / z.scaled_sum);
}

/// Ratio form max[0, e^{B/T}(1 - 3e^{J/T}) / (e^{(B+J)/T} + e^{(2B+J)/T}
/// + e^{B/T} + e^{J/T})]. E is even in B; evaluating at |B| makes that exact
/// in floating point as well.
inline double measure_ratio_form(const DimerParams& p, const FieldSpec& f,
                                 const ThermalPoint& t) {
  const double j = p.j_kelvin;
  const double b = std::abs(f.b_kelvin);
  const double tk = t.t_kelvin;
  const std::array<double, 4> a{(b + j) / tk, (2.0 * b + j) / tk, b / tk, j / tk};
  const double m = *std::max_element(a.begin(), a.end());
  double denom = 0.0;
  for (double ai : a) denom += std::exp(ai - m);
  const double pos = std::exp(a[2] - m);
  const double neg = 3.0 * std::exp(a[0] - m);
  return detail::clamp_measure((pos - neg) / denom, (pos + neg) / denom);
}

inline EntanglementResult measure(const DimerParams& p, const FieldSpec& f,
                                  const ThermalPoint& t) {
  EntanglementResult r;
  r.value = measure_ratio_form(p, f, t);
  r.regime = classify_regime(p, f);
  r.t_c_kelvin = critical_temperature(p);
  r.entangled = r.value > 0.0;
  return r;
}

// ---------------------------------------------------------------------------
// Strong-field maximum
// ---------------------------------------------------------------------------

struct PeakResult {
  double t_kelvin = 0.0;
  double value = 0.0;
};

/// Interior maximizer T_m of T -> E(J, B, T) on (0, T_c). Only the strong
/// field regime has one; weak and medium fields grow monotonically as T
/// decreases, and ferromagnets are never entangled.
///
/// A fixed 256-point scan on [eps, T_c - eps] (eps = 1e-6 T_c) brackets the
/// maximum, then golden-section search narrows it to 1e-8 T_c.
inline std::optional<PeakResult> peak_temperature(const DimerParams& p, const FieldSpec& f) {
  if (classify_regime(p, f) != Regime::StrongField) return std::nullopt;
  const double t_c = *critical_temperature(p);
  const double eps = 1e-6 * t_c;
  const double lo = eps;
  const double hi = t_c - eps;
  auto measure_at = [&](double tk) { return measure_ratio_form(p, f, ThermalPoint(tk)); };

  constexpr int kScan = 256;
  int best = 0;
  double best_value = -1.0;
  for (int k = 0; k < kScan; ++k) {
    const double tk = lo + (hi - lo) * k / (kScan - 1);
    const double v = measure_at(tk);
    if (v > best_value) {
      best_value = v;
      best = k;
    }
  }
  if (!(best_value > 0.0) || best == 0 || best == kScan - 1) {
    std::ostringstream msg;
    msg << "peak_temperature: could not bracket an interior maximum (J = " << p.j_kelvin
        << ", B = " << f.b_kelvin << ")";
    throw InternalError(msg.str());
  }

  double a = lo + (hi - lo) * (best - 1) / (kScan - 1);
  double b = lo + (hi - lo) * (best + 1) / (kScan - 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = measure_at(c);
  double fd = measure_at(d);
  const double tol = 1e-8 * t_c;
  for (int iter = 0; iter < 200 && (b - a) > tol; ++iter) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = measure_at(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = measure_at(d);
    }
  }
  const double t_m = 0.5 * (a + b);
  return PeakResult{t_m, measure_at(t_m)};
}

}  // namespace dimerent
