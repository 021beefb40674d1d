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
 * Grid verification suite: every closed form is compared against an
 * independent route at each point of a (J, B, T) grid and the worst
 * deviation per check is reported.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "dimerent/dimer_model.hpp"
#include "dimerent/entanglement.hpp"
#include "dimerent/grid.hpp"
#include "dimerent/oracle.hpp"
#include "dimerent/smalllin.hpp"
#include "dimerent/thermal.hpp"

namespace dimerent {

struct GridPoint {
  double j_kelvin = 0.0;
  double b_kelvin = 0.0;
  double t_kelvin = 0.0;
};

struct OracleReport {
  std::string check_name;
  std::size_t grid_size = 0;  // points actually compared
  std::size_t skipped = 0;    // points outside the check's domain
  double max_abs_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  GridPoint worst_point;
};

/// Row-major (J outer, B middle, T inner) verification grid.
struct OracleGrid {
  LinearRange j_range{-200.0, -1.0, 10};
  LinearRange b_range{-200.0, 200.0, 10};
  LinearRange t_range{0.05, 300.0, 10};

  static OracleGrid coarse() { return {}; }
  static OracleGrid fine() {
    return {{-200.0, -1.0, 30}, {-200.0, 200.0, 30}, {0.05, 300.0, 30}};
  }
};

inline constexpr double kSpectralTolerance = 1e-11;
inline constexpr double kMeasureTolerance = 1e-12;
inline constexpr double kGridSearchTolerance = 1e-5;
inline constexpr std::size_t kGridSearchPoints = 1'000'000;

namespace detail {

struct PointDeviations {
  double gibbs = 0.0;
  double pt_eigen = 0.0;
  double forms = 0.0;
  double concurrence = 0.0;
  double nearest = 0.0;
  bool nearest_skipped = true;
};

inline PointDeviations deviations_at(const GridPoint& g) {
  const DimerParams p(g.j_kelvin);
  const FieldSpec f(g.b_kelvin);
  const ThermalPoint t(g.t_kelvin);
  PointDeviations d;

  const DensityMatrix rho = density_closed_form(p, f, t);
  d.gibbs = max_abs_diff(rho.matrix().matrix(),
                         gibbs_oracle(build_hamiltonian(p, f), t).matrix());

  const PtSpectrum pt = pt_spectrum(rho);
  Vector4 formula{pt.lambda1, pt.lambda2, pt.lambda3, pt.lambda4};
  std::sort(formula.begin(), formula.end());
  const Spectrum4 numeric = eig_sym(partial_transpose(rho));
  for (std::size_t k = 0; k < 4; ++k)
    d.pt_eigen = std::max(d.pt_eigen, std::abs(formula[k] - numeric.eigenvalues[k]));

  const double e_elements = measure_from_state(rho);
  const double e_ratio = measure_ratio_form(p, f, t);
  const double e_partition = measure_partition_form(p, f, t);
  d.forms = std::max({std::abs(e_ratio - e_partition), std::abs(e_ratio - e_elements),
                      std::abs(e_partition - e_elements)});

  d.concurrence = std::abs(e_ratio - oracle::concurrence(rho));

  if (e_elements > 0.0) {
    const double closed = closest_separable_rho23(rho);
    const auto brute = oracle::grid_min_distance(rho, kGridSearchPoints);
    const double e_brute = kMeasureNormalization * brute.min_distance;
    d.nearest = std::max(std::abs(closed - brute.argmin_rho23), std::abs(e_brute - e_elements));
    d.nearest_skipped = false;
  }
  return d;
}

}  // namespace detail

/// Runs the five oracle checks over the grid:
///   closed-form rho vs numerical Gibbs state, PT eigenvalue formulas vs
///   numerical PT spectrum, three measure forms against each other, measure
///   vs Wootters concurrence, and the closed-form nearest separable state
///   vs a 10^6-point grid search (entangled points only).
/// Failures are reported, not thrown; an empty grid throws.
inline std::vector<OracleReport> run_all_checks(const OracleGrid& grid, std::size_t threads = 1) {
  if (grid.j_range.count == 0 || grid.b_range.count == 0 || grid.t_range.count == 0)
    throw std::invalid_argument("run_all_checks: empty grid");
  grid.j_range.validate("j grid");
  grid.b_range.validate("b grid");
  grid.t_range.validate("t grid");
  if (!(grid.t_range.start > 0.0)) throw std::invalid_argument("run_all_checks: T must be > 0");

  std::vector<GridPoint> points;
  for (double j : grid.j_range.values())
    for (double b : grid.b_range.values())
      for (double t : grid.t_range.values()) points.push_back({j, b, t});

  std::vector<detail::PointDeviations> devs(points.size());
  parallel_for(points.size(), resolve_threads(threads),
               [&](std::size_t i) { devs[i] = detail::deviations_at(points[i]); });

  std::vector<OracleReport> reports{
      {"closed-form-rho-vs-gibbs", 0, 0, 0.0, kSpectralTolerance, true, {}},
      {"pt-eigenvalues-vs-numeric", 0, 0, 0.0, kSpectralTolerance, true, {}},
      {"measure-element-ratio-partition", 0, 0, 0.0, kMeasureTolerance, true, {}},
      {"measure-vs-concurrence", 0, 0, 0.0, kMeasureTolerance, true, {}},
      {"nearest-separable-vs-grid-search", 0, 0, 0.0, kGridSearchTolerance, true, {}},
  };
  auto fold = [&](OracleReport& r, double dev, const GridPoint& g) {
    // Ties keep the earliest point in row-major order.
    ++r.grid_size;
    if (r.grid_size == 1 || dev > r.max_abs_deviation || std::isnan(dev)) {
      r.max_abs_deviation = dev;
      r.worst_point = g;
    }
  };
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& d = devs[i];
    fold(reports[0], d.gibbs, points[i]);
    fold(reports[1], d.pt_eigen, points[i]);
    fold(reports[2], d.forms, points[i]);
    fold(reports[3], d.concurrence, points[i]);
    if (d.nearest_skipped) {
      ++reports[4].skipped;
    } else {
      fold(reports[4], d.nearest, points[i]);
    }
  }
  for (auto& r : reports) r.pass = r.max_abs_deviation <= r.tolerance;
  return reports;
}

}  // namespace dimerent
