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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <boost/math/tools/toms748_solve.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dimerent.hpp"
#include "dimerent/cli.hpp"

using namespace dimerent;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

double e_at(double j, double b, double t) {
  return measure(DimerParams(j), FieldSpec(b), ThermalPoint(t)).value;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

/// Root in T of the unclamped measure, bracketed on [T_c/2, 2 T_c].
double measure_root(double j, double b) {
  const DimerParams p(j);
  const FieldSpec f(b);
  auto fn = [&](double t) { return signed_measure(p, f, ThermalPoint(t)); };
  const double guess = -j / std::log(3.0);
  boost::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(
      fn, 0.5 * guess, 2.0 * guess, boost::math::tools::eps_tolerance<double>(52), iters);
  return 0.5 * (r.first + r.second);
}

int cli(std::vector<std::string> args) {
  args.insert(args.begin(), "dimerent");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome nitrosyl_point_predictions() {
  Outcome o;
  const double weak = e_at(-136.0, 10.0, 60.0);
  const double strong = e_at(-136.0, 140.0, 60.0);
  o.require(std::abs(weak - 0.52) <= 0.005, "E(B=10)=" + num(weak) + " not within 0.005 of 0.52");
  o.require(std::abs(strong - 0.32) <= 0.005, "E(B=140)=" + num(strong) + " not within 0.005 of 0.32");
  o.require(std::abs(weak - 0.524431801111925) <= 1e-10, "E(B=10) off reference by > 1e-10");
  o.require(std::abs(strong - 0.315684705932813) <= 1e-10, "E(B=140) off reference by > 1e-10");
  o.detail = o.pass ? "E=" + num(weak) + ", " + num(strong) : o.detail;
  return o;
}

Outcome decoherence_temperature() {
  Outcome o;
  double worst = 0.0;
  for (double j : {-1.0, -5.0, -10.0, -136.0}) {
    const double closed = *critical_temperature(DimerParams(j));
    const double root = measure_root(j, 0.0);
    worst = std::max(worst, rel(root, closed));
    o.require(std::abs(closed - (-j / std::log(3.0))) <= 1e-15 * closed, "closed form J=" + num(j));
    o.require(rel(root, closed) <= 1e-9, "root vs closed form at J=" + num(j));
  }
  if (o.pass) o.detail = "max rel dev " + num(worst);
  return o;
}

Outcome magnetic_shielding() {
  Outcome o;
  const double reference = measure_root(-10.0, 0.0);
  double worst = 0.0;
  for (double b : {0.0, 1.0, 10.0, 100.0, 1000.0}) {
    const double root = measure_root(-10.0, b);
    worst = std::max(worst, rel(root, reference));
    o.require(rel(root, reference) <= 1e-9, "root moved at B=" + num(b));
  }
  // About 100 T expressed in Kelvin.
  const double b_tesla = tesla_to_kelvin(100.0);
  const double root = measure_root(-10.0, b_tesla);
  o.require(rel(root, *critical_temperature(DimerParams(-10.0))) <= 1e-9, "100 T spot check");
  if (o.pass) o.detail = "max rel spread " + num(worst) + ", T_c=" + num(reference);
  return o;
}

Outcome ferromagnetic_separability() {
  Outcome o;
  std::size_t points = 0;
  for (double j : {1.0, 10.0, 136.0}) {
    for (double b : LinearRange{-200.0, 200.0, 10}.values()) {
      for (double t : LinearRange{0.05, 300.0, 10}.values()) {
        ++points;
        const DimerParams p(j);
        const FieldSpec f(b);
        const ThermalPoint tp(t);
        const std::string at = "(J=" + num(j) + ",B=" + num(b) + ",T=" + num(t) + ")";
        o.require(measure(p, f, tp).value == 0.0, "E != 0 at " + at);
        o.require(lambda4_signed_log(p, f, tp).sign == 1, "lambda4 <= 0 at " + at);
        const double l4 = pt_spectrum(density_closed_form(p, f, tp)).lambda4;
        o.require(l4 >= 0.0, "representable lambda4 negative at " + at);
      }
    }
  }
  if (o.pass) o.detail = std::to_string(points) + " points";
  return o;
}

Outcome zero_temperature_limits() {
  Outcome o;
  const double t = 1e-3 * 10.0;
  const double weak = e_at(-10.0, 5.0, t);
  const double medium = e_at(-10.0, 10.0, t);
  const double strong = e_at(-10.0, 20.0, t);
  o.require(std::abs(weak - 1.0) <= 1e-3, "weak " + num(weak));
  o.require(std::abs(medium - 0.5) <= 1e-3, "medium " + num(medium));
  o.require(std::abs(strong) <= 1e-3, "strong " + num(strong));
  if (o.pass) o.detail = "E=" + num(weak) + ", " + num(medium) + ", " + num(strong);
  return o;
}

Outcome strong_field_peak() {
  Outcome o;
  const DimerParams p(-10.0);
  const FieldSpec f(20.0);
  const auto peak = peak_temperature(p, f);
  if (!peak) {
    o.require(false, "no peak found");
    return o;
  }
  const double tm = peak->t_kelvin;
  o.require(tm > 0.0 && tm < 9.10239, "T_m=" + num(tm) + " outside (0, 9.10239)");
  o.require(peak->value > e_at(-10.0, 20.0, tm - 0.01), "E(T_m) <= E(T_m - 0.01)");
  o.require(peak->value > e_at(-10.0, 20.0, tm + 0.01), "E(T_m) <= E(T_m + 0.01)");

  const double tc = *critical_temperature(p);
  constexpr int kScan = 100000;
  double best_t = 0.0, best_e = -1.0;
  for (int k = 1; k <= kScan; ++k) {
    const double t = tc * k / (kScan + 1.0);
    const double e = e_at(-10.0, 20.0, t);
    if (e > best_e) {
      best_e = e;
      best_t = t;
    }
  }
  o.require(std::abs(best_t - tm) <= 1e-3, "scan T_m=" + num(best_t) + " vs " + num(tm));
  if (o.pass) o.detail = "T_m=" + num(tm) + " (scan " + num(best_t) + "), E=" + num(peak->value);
  return o;
}

Outcome oracle_equivalences() {
  Outcome o;
  const auto reports = run_all_checks(OracleGrid::coarse(), 0);
  std::ostringstream summary;
  for (const auto& r : reports) {
    o.require(r.pass, r.check_name + " dev " + num(r.max_abs_deviation));
    summary << r.check_name << "=" << num(r.max_abs_deviation) << " ";
  }
  o.require(reports.size() == 5, "expected 5 checks");
  o.require(cli({"verify"}) == 0, "verify exit code != 0");
  if (o.pass) o.detail = summary.str();
  return o;
}

Outcome symmetry_and_monotonicity() {
  Outcome o;
  for (double j : {-1.0, -10.0, -136.0})
    for (double b : LinearRange{0.0, 400.0, 41}.values())
      for (double t : LinearRange{0.05, 300.0, 31}.values())
        o.require(e_at(j, b, t) == e_at(j, -b, t), "not even at B=" + num(b));

  for (double t : {0.5, 1.0, 3.0, 5.0, 8.0, 9.0}) {
    double prev = e_at(-10.0, 0.0, t);
    for (double b : LinearRange{0.05, 60.0, 1200}.values()) {
      const double e = e_at(-10.0, b, t);
      if (e == 0.0) break;  // far tail below double range
      o.require(e < prev, "not decreasing in |B| at T=" + num(t) + ", B=" + num(b));
      prev = e;
    }
  }
  // Below T ~ |J|/20 the B = 0 curve equals 1 to double precision, so the
  // strict check starts at 0.5 K; the whole range is checked for no increase.
  for (double b : {0.0, 2.5, 5.0, 7.5, 10.0}) {
    double prev = e_at(-10.0, b, 0.5);
    for (double t : LinearRange{0.51, 9.1, 800}.values()) {
      const double e = e_at(-10.0, b, t);
      o.require(e < prev, "not decreasing in T at B=" + num(b) + ", T=" + num(t));
      prev = e;
    }
    prev = e_at(-10.0, b, 0.05);
    for (double t : LinearRange{0.06, 0.5, 200}.values()) {
      const double e = e_at(-10.0, b, t);
      o.require(e <= prev, "increasing in T at B=" + num(b) + ", T=" + num(t));
      prev = e;
    }
  }
  const double plus = e_at(-10.0, 400.0, 5.0);
  const double minus = e_at(-10.0, -400.0, 5.0);
  o.require(plus < 1e-6 && minus < 1e-6, "asymptote " + num(plus));
  if (o.pass) o.detail = "E(+-400)=" + num(plus);
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto root = std::filesystem::path(DIMERENT_TEST_TMPDIR) / "acceptance_determinism";
  std::filesystem::remove_all(root);
  std::size_t files = 0;
  for (const char* preset : {"fig2", "fig3", "fig4", "fig5", "fig6"}) {
    const auto a = root / preset / "run1";
    const auto b = root / preset / "run2";
    const auto c = root / preset / "threads4";
    o.require(cli({"figure", "--preset", preset, "--out", a.string(), "--threads", "1"}) == 0,
              std::string(preset) + " run1 failed");
    o.require(cli({"figure", "--preset", preset, "--out", b.string(), "--threads", "1"}) == 0,
              std::string(preset) + " run2 failed");
    o.require(cli({"figure", "--preset", preset, "--out", c.string(), "--threads", "4"}) == 0,
              std::string(preset) + " threaded run failed");
    for (const auto& entry : std::filesystem::directory_iterator(a)) {
      ++files;
      const auto name = entry.path().filename();
      const std::string ref = slurp(entry.path());
      o.require(!ref.empty(), name.string() + " empty");
      o.require(ref == slurp(b / name), name.string() + " differs between runs");
      o.require(ref == slurp(c / name), name.string() + " differs across thread counts");
    }
  }
  if (o.pass) o.detail = std::to_string(files) + " files byte-identical";
  return o;
}

Outcome unit_conversion() {
  Outcome o;
  const double t10 = kelvin_to_tesla(10.0);
  const double t140 = kelvin_to_tesla(140.0);
  const double k10 = tesla_to_kelvin(7.456);
  const double k140 = tesla_to_kelvin(104.238);
  o.require(rel(t10, 7.456) <= 0.005, "10 K -> " + num(t10) + " T");
  o.require(rel(t140, 104.238) <= 0.005, "140 K -> " + num(t140) + " T");
  o.require(rel(k10, 10.0) <= 0.005, "7.456 T -> " + num(k10) + " K");
  o.require(rel(k140, 140.0) <= 0.005, "104.238 T -> " + num(k140) + " K");
  if (o.pass) o.detail = "10 K = " + num(t10) + " T, 140 K = " + num(t140) + " T";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"nitrosyl-point-predictions", nitrosyl_point_predictions},
      {"decoherence-temperature", decoherence_temperature},
      {"magnetic-shielding", magnetic_shielding},
      {"ferromagnetic-separability", ferromagnetic_separability},
      {"zero-temperature-limits", zero_temperature_limits},
      {"strong-field-peak", strong_field_peak},
      {"oracle-equivalences", oracle_equivalences},
      {"symmetry-and-monotonicity", symmetry_and_monotonicity},
      {"determinism", determinism},
      {"unit-conversion", unit_conversion},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << index << " " << name << "  " << o.detail
              << '\n';
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
