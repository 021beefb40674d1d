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

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dimerent/dimer_model.hpp"
#include "dimerent/entanglement.hpp"
#include "dimerent/grid.hpp"
#include "dimerent/thermal.hpp"

namespace dimerent {

/// Rows are emitted J outer, B middle, T inner.
struct GridSpec {
  std::vector<double> j_values;
  LinearRange b_range;
  LinearRange t_range;

  void validate() const {
    if (j_values.empty()) throw std::invalid_argument("GridSpec: need at least one J value");
    for (double j : j_values)
      if (!std::isfinite(j)) throw std::invalid_argument("GridSpec: J values must be finite");
    b_range.validate("b range");
    t_range.validate("t range");
    if (!(t_range.start > 0.0)) throw std::invalid_argument("t range: start must be > 0");
  }

  std::size_t size() const { return j_values.size() * b_range.count * t_range.count; }
};

struct SweepRow {
  double j_kelvin = 0.0;
  double b_kelvin = 0.0;
  double t_kelvin = 0.0;
  double entanglement = 0.0;
  Regime regime = Regime::FerromagneticSeparable;
  std::optional<double> t_c_kelvin;
};

/// Evaluates the measure on every grid point. The output order and every
/// value are independent of `threads`.
inline std::vector<SweepRow> evaluate_grid(const GridSpec& spec, std::size_t threads = 1) {
  spec.validate();
  const auto bs = spec.b_range.values();
  const auto ts = spec.t_range.values();
  const std::size_t nb = bs.size();
  const std::size_t nt = ts.size();

  std::vector<SweepRow> rows(spec.size());
  parallel_for(rows.size(), resolve_threads(threads), [&](std::size_t idx) {
    const double j = spec.j_values[idx / (nb * nt)];
    const double b = bs[(idx / nt) % nb];
    const double t = ts[idx % nt];
    const auto r = measure(DimerParams(j), FieldSpec(b), ThermalPoint(t));
    rows[idx] = {j, b, t, r.value, r.regime, r.t_c_kelvin};
  });
  return rows;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

inline constexpr std::string_view kCsvHeader =
    "j_kelvin,b_kelvin,t_kelvin,entanglement,regime,t_c_kelvin";

/// 12 significant digits, shortest of fixed/exponent notation.
inline std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << format_number(r.j_kelvin) << ',' << format_number(r.b_kelvin) << ','
       << format_number(r.t_kelvin) << ',' << format_number(r.entanglement) << ','
       << to_string(r.regime) << ',';
    if (r.t_c_kelvin) os << format_number(*r.t_c_kelvin);
    os << '\n';
  }
}

// ---------------------------------------------------------------------------
// Figure presets
// ---------------------------------------------------------------------------

struct FigureSeries {
  std::string stem;  // output file name without extension
  GridSpec grid;
};

struct FigurePreset {
  std::string name;
  std::vector<FigureSeries> series;
};

namespace detail {

inline std::string label_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

inline const LinearRange kFigureTAxis{0.01, 12.0, 600};

inline FigureSeries t_series(const std::string& fig, double j, double b) {
  return {fig + "_J" + label_number(j) + "_B" + label_number(b), {{j}, {b, b, 1}, kFigureTAxis}};
}

inline FigureSeries b_series(const std::string& fig, double j, double t) {
  return {fig + "_J" + label_number(j) + "_T" + label_number(t),
          {{j}, {-40.0, 40.0, 801}, {t, t, 1}}};
}

}  // namespace detail

/// Datasets behind the temperature and field plots of the dimer measure.
/// The B (fig2, fig4) and T (fig5) series values are representative picks
/// inside each regime.
///   fig2: weak field, J = -10, B in {0, 2.5, 5, 7.5}, E vs T
///   fig3: medium field, J in {-5, -10}, B in {0, |J|}, E vs T
///   fig4: strong field, J = -10, B in {12.5, 15, 20, 30}, E vs T
///   fig5: J = -10, T in {1, 3, 5, 7}, E vs B on [-40, 40]
///   fig6: J = -10 surface, B in [-40, 40] x T in [0.01, 12]
inline FigurePreset figure_preset(std::string_view name) {
  using detail::b_series;
  using detail::t_series;
  const std::string fig(name);
  if (name == "fig2") {
    return {fig, {t_series(fig, -10, 0), t_series(fig, -10, 2.5), t_series(fig, -10, 5),
                  t_series(fig, -10, 7.5)}};
  }
  if (name == "fig3") {
    return {fig, {t_series(fig, -5, 0), t_series(fig, -5, 5), t_series(fig, -10, 0),
                  t_series(fig, -10, 10)}};
  }
  if (name == "fig4") {
    return {fig, {t_series(fig, -10, 12.5), t_series(fig, -10, 15), t_series(fig, -10, 20),
                  t_series(fig, -10, 30)}};
  }
  if (name == "fig5") {
    return {fig, {b_series(fig, -10, 1), b_series(fig, -10, 3), b_series(fig, -10, 5),
                  b_series(fig, -10, 7)}};
  }
  if (name == "fig6") {
    return {fig, {{"fig6_J-10", {{-10.0}, {-40.0, 40.0, 161}, {0.01, 12.0, 241}}}}};
  }
  throw std::invalid_argument("unknown figure preset '" + fig + "' (expected fig2..fig6)");
}

/// Same preset with its series values replaced: B values for fig2 and fig4,
/// J values for fig3 (each paired with B = 0 and B = |J|), T values for fig5.
/// fig6 is a surface and has no series to override.
inline FigurePreset figure_preset(std::string_view name, const std::vector<double>& values) {
  using detail::b_series;
  using detail::t_series;
  auto preset = figure_preset(name);
  if (values.empty()) return preset;
  for (double v : values)
    if (!std::isfinite(v)) throw std::invalid_argument("series values must be finite");
  preset.series.clear();
  const std::string& fig = preset.name;
  if (name == "fig2" || name == "fig4") {
    for (double b : values) preset.series.push_back(t_series(fig, -10, b));
  } else if (name == "fig3") {
    for (double j : values) {
      preset.series.push_back(t_series(fig, j, 0));
      preset.series.push_back(t_series(fig, j, std::abs(j)));
    }
  } else if (name == "fig5") {
    for (double t : values) {
      if (!(t > 0.0)) throw std::invalid_argument("fig5 temperatures must be > 0");
      preset.series.push_back(b_series(fig, -10, t));
    }
  } else {
    throw std::invalid_argument("preset '" + fig + "' has no series values to override");
  }
  return preset;
}

// ---------------------------------------------------------------------------
// Field inflection
// ---------------------------------------------------------------------------

/// First sign change of the second central difference of B -> E(J, B, T) on
/// (0, 5|J|) with step |J|/1000; returns the midpoint of the bracketing
/// pair. Absent when E vanishes identically (T >= T_c) or no sign change is
/// found. Near |J| at low T but not pinned to it.
inline std::optional<double> find_inflection_b(const DimerParams& p, const ThermalPoint& t) {
  if (!p.antiferromagnetic()) return std::nullopt;
  const double abs_j = std::abs(p.j_kelvin);
  const double h = abs_j / 1000.0;
  const int steps = 5000;
  auto e = [&](int k) { return measure_ratio_form(p, FieldSpec(k * h), t); };

  double prev_b = 0.0;
  int prev_sign = 0;
  double em = e(0), e0 = e(1);
  for (int k = 1; k < steps; ++k) {
    const double ep = e(k + 1);
    const double d2 = ep - 2.0 * e0 + em;
    const int sign = (d2 > 0.0) - (d2 < 0.0);
    const double b = k * h;
    if (sign != 0) {
      if (prev_sign != 0 && sign != prev_sign) return 0.5 * (prev_b + b);
      prev_sign = sign;
      prev_b = b;
    }
    em = e0;
    e0 = ep;
  }
  return std::nullopt;
}

}  // namespace dimerent
