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
 * Command-line front end. run_cli() is the whole program; tools/dimerent.cpp
 * only forwards argv and the standard streams so tests can drive it
 * in-process.
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O
 * error, 4 unknown material.
 */

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dimerent/dimer_model.hpp"
#include "dimerent/entanglement.hpp"
#include "dimerent/materials.hpp"
#include "dimerent/sweep.hpp"
#include "dimerent/thermal.hpp"
#include "dimerent/verification.hpp"

namespace dimerent::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kIo = 3,
  kLookup = 4,
};

/// Error carrying the exit code it maps to.
class CliError : public std::runtime_error {
 public:
  CliError(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

inline CliError usage_error(const std::string& what) { return {kUsage, what}; }

/// Parses "start:stop:count" (inclusive endpoints, count points).
inline LinearRange parse_range(const std::string& text, const std::string& flag) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw usage_error(flag + ": expected start:stop:count, got '" + text + "'");

  auto to_double = [&](const std::string& s) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end || !std::isfinite(v))
      throw usage_error(flag + ": '" + s + "' is not a finite number");
    return v;
  };
  LinearRange r;
  r.start = to_double(parts[0]);
  r.stop = to_double(parts[1]);
  long long count = 0;
  const auto* end = parts[2].data() + parts[2].size();
  const auto res = std::from_chars(parts[2].data(), end, count);
  if (res.ec != std::errc{} || res.ptr != end)
    throw usage_error(flag + ": count '" + parts[2] + "' is not an integer");
  if (count < 1) throw usage_error(flag + ": count must be >= 1");
  r.count = static_cast<std::size_t>(count);
  if (r.start > r.stop) throw usage_error(flag + ": start must be <= stop");
  return r;
}

namespace detail {

inline std::size_t default_threads() {
  if (const char* env = std::getenv("DIMERENT_THREADS")) {
    std::size_t n = 0;
    const std::string s(env);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), n);
    if (res.ec == std::errc{} && res.ptr == s.data() + s.size() && n > 0) return n;
  }
  return 0;
}

inline MaterialRegistry load_registry(const std::string& file) {
  if (file.empty()) return MaterialRegistry();
  try {
    return MaterialRegistry(load_registry_file(file));
  } catch (const RegistryError& e) {
    throw usage_error(e.what());
  }
}

struct CouplingChoice {
  DimerParams params;
  std::optional<std::string> material;
};

inline CouplingChoice resolve_coupling(const std::optional<double>& j,
                                       const std::optional<std::string>& material,
                                       const std::optional<double>& g, const std::string& file) {
  if (j && material) throw usage_error("--j and --material are mutually exclusive");
  if (!j && !material) throw usage_error("one of --j or --material is required");
  if (g && !(*g > 0.0)) throw usage_error("--g must be > 0");
  if (j) return {DimerParams(*j, g.value_or(2.0)), std::nullopt};

  const auto registry = load_registry(file);
  const auto rec = registry.find(*material);
  if (!rec) throw CliError(kLookup, "unknown material '" + *material + "'");
  return {DimerParams(rec->j_kelvin, g.value_or(rec->g_factor)), rec->name};
}

inline void write_text_file(const std::filesystem::path& path,
                            const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CliError(kIo, "cannot open '" + path.string() + "' for writing");
  body(out);
  out.flush();
  if (!out) throw CliError(kIo, "failed writing '" + path.string() + "'");
}

inline nlohmann::json rows_to_json(const std::vector<SweepRow>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json o;
    o["j_kelvin"] = r.j_kelvin;
    o["b_kelvin"] = r.b_kelvin;
    o["t_kelvin"] = r.t_kelvin;
    o["entanglement"] = r.entanglement;
    o["regime"] = std::string(to_string(r.regime));
    o["t_c_kelvin"] = r.t_c_kelvin ? nlohmann::json(*r.t_c_kelvin) : nlohmann::json(nullptr);
    arr.push_back(std::move(o));
  }
  return arr;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

struct MeasureArgs {
  std::optional<double> j;
  std::optional<std::string> material;
  std::string file;
  std::optional<double> b;
  std::optional<double> b_tesla;
  std::optional<double> g;
  std::optional<double> temp;
};

inline int cmd_measure(const MeasureArgs& a, std::ostream& out) {
  if (a.b && a.b_tesla) throw usage_error("--b and --b-tesla are mutually exclusive");
  if (!a.b && !a.b_tesla) throw usage_error("one of --b or --b-tesla is required");
  if (!a.temp) throw usage_error("--temp is required");
  if (!(*a.temp > 0.0) || !std::isfinite(*a.temp)) throw usage_error("--temp must be > 0");

  const auto coupling = detail::resolve_coupling(a.j, a.material, a.g, a.file);
  const DimerParams& p = coupling.params;
  const double b_kelvin = a.b ? *a.b : tesla_to_kelvin(*a.b_tesla, p.g_factor);
  const FieldSpec f(b_kelvin);
  const ThermalPoint t(*a.temp);

  const auto result = measure(p, f, t);
  const auto pt = pt_spectrum(density_closed_form(p, f, t));

  if (coupling.material) out << "material = " << *coupling.material << '\n';
  out << "J = " << format_number(p.j_kelvin) << " K\n";
  out << "g = " << format_number(p.g_factor) << '\n';
  out << "B = " << format_number(b_kelvin) << " K";
  if (a.b_tesla) out << " (" << format_number(*a.b_tesla) << " T)";
  out << '\n';
  out << "T = " << format_number(t.t_kelvin) << " K\n";
  out << "E = " << format_number(result.value) << '\n';
  out << "regime = " << to_string(result.regime) << '\n';
  out << "T_c = ";
  if (result.t_c_kelvin)
    out << format_number(*result.t_c_kelvin) << " K\n";
  else
    out << "none\n";
  out << "lambda4 = " << format_number(pt.lambda4) << '\n';
  out << "entangled = " << (result.entangled ? "yes" : "no") << '\n';
  return kOk;
}

inline int cmd_tc(const std::optional<double>& j, const std::optional<std::string>& material,
                  const std::string& file, std::ostream& out) {
  const auto coupling = detail::resolve_coupling(j, material, std::nullopt, file);
  if (const auto tc = critical_temperature(coupling.params))
    out << format_number(*tc) << '\n';
  else
    out << "none (ferromagnetic or zero coupling)\n";
  return kOk;
}

inline int cmd_convert(const std::optional<double>& tesla, const std::optional<double>& kelvin,
                       double g, std::ostream& out) {
  if (tesla && kelvin) throw usage_error("--tesla and --kelvin are mutually exclusive");
  if (!tesla && !kelvin) throw usage_error("one of --tesla or --kelvin is required");
  if (!(g > 0.0)) throw usage_error("--g must be > 0");
  if (tesla) {
    out << format_number(*tesla) << " T = " << format_number(tesla_to_kelvin(*tesla, g)) << " K";
  } else {
    out << format_number(*kelvin) << " K = " << format_number(kelvin_to_tesla(*kelvin, g))
        << " T";
  }
  out << " (g = " << format_number(g)
      << ", mu_B/k_B = " << format_number(PhysicalConstants::mu_b_over_k_b) << " K/T)\n";
  return kOk;
}

struct SweepArgs {
  std::vector<double> j;
  std::string b_range;
  std::string t_range;
  std::string out;
  std::string json;
  std::size_t threads = 0;
};

inline int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  if (a.j.empty()) throw usage_error("--j is required");
  if (a.out.empty()) throw usage_error("--out is required");
  GridSpec spec{a.j, parse_range(a.b_range, "--b-range"), parse_range(a.t_range, "--t-range")};
  if (!(spec.t_range.start > 0.0)) throw usage_error("--t-range: temperatures must be > 0");
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  const auto rows = evaluate_grid(spec, a.threads);
  detail::write_text_file(a.out, [&](std::ostream& os) { write_csv(os, rows); });
  if (!a.json.empty()) {
    detail::write_text_file(a.json,
                            [&](std::ostream& os) { os << detail::rows_to_json(rows).dump(2) << '\n'; });
  }
  out << "wrote " << rows.size() << " rows to " << a.out << '\n';
  return kOk;
}

inline int cmd_figure(const std::string& preset_name, const std::vector<double>& values,
                      const std::string& out_dir, std::size_t threads, std::ostream& out) {
  if (out_dir.empty()) throw usage_error("--out is required");
  FigurePreset preset;
  try {
    preset = figure_preset(preset_name, values);
  } catch (const std::invalid_argument& e) {
    throw usage_error(std::string("--preset: ") + e.what());
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw CliError(kIo, "cannot create directory '" + out_dir + "': " + ec.message());
  for (const auto& series : preset.series) {
    const auto rows = evaluate_grid(series.grid, threads);
    const auto path = std::filesystem::path(out_dir) / (series.stem + ".csv");
    detail::write_text_file(path, [&](std::ostream& os) { write_csv(os, rows); });
    out << "wrote " << path.string() << " (" << rows.size() << " rows)\n";
  }
  return kOk;
}

inline void print_reports(const std::vector<OracleReport>& reports, std::ostream& out) {
  out << std::left << std::setw(36) << "check" << std::right << std::setw(8) << "points"
      << std::setw(9) << "skipped" << std::setw(14) << "max_abs_dev" << std::setw(11)
      << "tolerance" << "  result\n";
  for (const auto& r : reports) {
    std::ostringstream dev, tol;
    dev << std::scientific << std::setprecision(3) << r.max_abs_deviation;
    tol << std::scientific << std::setprecision(0) << r.tolerance;
    out << std::left << std::setw(36) << r.check_name << std::right << std::setw(8)
        << r.grid_size << std::setw(9) << r.skipped << std::setw(14) << dev.str()
        << std::setw(11) << tol.str() << "  " << (r.pass ? "PASS" : "FAIL") << '\n';
  }
}

inline int cmd_verify(const std::string& grid_label, const std::string& summary,
                      std::size_t threads, std::ostream& out) {
  OracleGrid grid;
  if (grid_label == "coarse") {
    grid = OracleGrid::coarse();
  } else if (grid_label == "fine") {
    grid = OracleGrid::fine();
  } else {
    throw usage_error("--grid: unknown grid '" + grid_label + "' (expected coarse or fine)");
  }
  const auto reports = run_all_checks(grid, threads);
  print_reports(reports, out);
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;

  if (!summary.empty()) {
    nlohmann::json doc;
    doc["grid"] = grid_label;
    doc["all_pass"] = all_pass;
    doc["checks"] = nlohmann::json::array();
    for (const auto& r : reports) {
      doc["checks"].push_back({{"check_name", r.check_name},
                               {"grid_size", r.grid_size},
                               {"skipped", r.skipped},
                               {"max_abs_deviation", r.max_abs_deviation},
                               {"tolerance", r.tolerance},
                               {"pass", r.pass},
                               {"worst_point",
                                {{"j_kelvin", r.worst_point.j_kelvin},
                                 {"b_kelvin", r.worst_point.b_kelvin},
                                 {"t_kelvin", r.worst_point.t_kelvin}}}});
    }
    detail::write_text_file(summary, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
  }
  return all_pass ? kOk : kVerificationFailed;
}

inline int cmd_materials(const std::string& action, const std::string& name,
                         const std::string& file, std::ostream& out) {
  const auto registry = detail::load_registry(file);
  if (action == "list") {
    for (const auto& rec : registry.records()) {
      out << rec.name << "  j_kelvin=" << format_number(rec.j_kelvin)
          << "  g_factor=" << format_number(rec.g_factor);
      if (!rec.note.empty()) out << "  # " << rec.note;
      out << '\n';
    }
    return kOk;
  }
  if (action == "show") {
    if (name.empty()) throw usage_error("materials show: a material name is required");
    const auto rec = registry.find(name);
    if (!rec) throw CliError(kLookup, "unknown material '" + name + "'");
    out << "name = " << rec->name << '\n';
    out << "j_kelvin = " << format_number(rec->j_kelvin) << '\n';
    out << "g_factor = " << format_number(rec->g_factor) << '\n';
    if (!rec->note.empty()) out << "note = " << rec->note << '\n';
    return kOk;
  }
  throw usage_error("materials: unknown action '" + action + "' (expected list or show)");
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thermal entanglement of spin-1/2 Heisenberg dimers in a magnetic field",
               "dimerent"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "dimerent 1.0.0");

  const std::size_t env_threads = detail::default_threads();

  MeasureArgs m;
  auto* measure_cmd = app.add_subcommand("measure", "Entanglement at one (J, B, T) point");
  measure_cmd->add_option("--j", m.j, "Exchange coupling J/k_B in Kelvin (J < 0: antiferromagnet)");
  measure_cmd->add_option("--material", m.material, "Material name from the registry");
  measure_cmd->add_option("--file", m.file, "User registry file (JSON)");
  measure_cmd->add_option("--b", m.b, "Reduced field g mu_B B / k_B in Kelvin");
  measure_cmd->add_option("--b-tesla", m.b_tesla, "Field in Tesla");
  measure_cmd->add_option("--g", m.g, "g-factor (default 2, or the material's)");
  measure_cmd->add_option("--temp", m.temp, "Temperature in Kelvin (> 0)");

  std::optional<double> tc_j;
  std::optional<std::string> tc_material;
  std::string tc_file;
  auto* tc_cmd = app.add_subcommand("tc", "Decoherence temperature -J / ln 3");
  tc_cmd->add_option("--j", tc_j, "Exchange coupling in Kelvin");
  tc_cmd->add_option("--material", tc_material, "Material name from the registry");
  tc_cmd->add_option("--file", tc_file, "User registry file (JSON)");

  std::optional<double> conv_tesla, conv_kelvin;
  double conv_g = 2.0;
  auto* convert_cmd = app.add_subcommand("convert", "Convert a field between Tesla and Kelvin");
  convert_cmd->add_option("--tesla", conv_tesla, "Field in Tesla");
  convert_cmd->add_option("--kelvin", conv_kelvin, "Reduced field in Kelvin");
  convert_cmd->add_option("--g", conv_g, "g-factor")->capture_default_str();

  SweepArgs s;
  s.threads = env_threads;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a (J, B, T) grid to CSV");
  sweep_cmd->add_option("--j", s.j, "Exchange coupling(s) in Kelvin")->delimiter(',');
  sweep_cmd->add_option("--b-range", s.b_range, "Field range start:stop:count (Kelvin)")
      ->required();
  sweep_cmd->add_option("--t-range", s.t_range, "Temperature range start:stop:count (Kelvin)")
      ->required();
  sweep_cmd->add_option("--out", s.out, "Output CSV path");
  sweep_cmd->add_option("--json", s.json, "Optional JSON output path");
  sweep_cmd->add_option("--threads", s.threads, "Worker threads (0 = all cores)");

  std::string fig_preset, fig_out;
  std::vector<double> fig_values;
  std::size_t fig_threads = env_threads;
  auto* figure_cmd = app.add_subcommand("figure", "Write the CSV series of a figure preset");
  figure_cmd->add_option("--preset", fig_preset, "fig2, fig3, fig4, fig5 or fig6")->required();
  figure_cmd->add_option("--values", fig_values, "Override the preset's series values")
      ->delimiter(',');
  figure_cmd->add_option("--out", fig_out, "Output directory");
  figure_cmd->add_option("--threads", fig_threads, "Worker threads (0 = all cores)");

  std::string verify_grid = "coarse";
  std::string verify_summary;
  std::size_t verify_threads = env_threads;
  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle verification suite");
  verify_cmd->add_option("--grid", verify_grid, "coarse (10^3 points) or fine (30^3)")
      ->capture_default_str();
  verify_cmd->add_option("--summary", verify_summary, "Optional JSON summary path");
  verify_cmd->add_option("--threads", verify_threads, "Worker threads (0 = all cores)");

  std::string mat_action, mat_name, mat_file;
  auto* materials_cmd = app.add_subcommand("materials", "List or show registry entries");
  materials_cmd->add_option("action", mat_action, "list | show")->required();
  materials_cmd->add_option("name", mat_name, "Material name (for show)");
  materials_cmd->add_option("--file", mat_file, "User registry file (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (measure_cmd->parsed()) return cmd_measure(m, out);
    if (tc_cmd->parsed()) return cmd_tc(tc_j, tc_material, tc_file, out);
    if (convert_cmd->parsed()) return cmd_convert(conv_tesla, conv_kelvin, conv_g, out);
    if (sweep_cmd->parsed()) return cmd_sweep(s, out);
    if (figure_cmd->parsed()) return cmd_figure(fig_preset, fig_values, fig_out, fig_threads, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_grid, verify_summary, verify_threads, out);
    if (materials_cmd->parsed()) return cmd_materials(mat_action, mat_name, mat_file, out);
  } catch (const CliError& e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace dimerent::cli
