// SPDX-License-Identifier: Apache-2.0
//
// Command implementations behind the `rissim` executable. Every command is a
// pure function of the resolved configuration and writes only to the given
// streams and to files under the output directory, so reruns are byte-identical.
#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rissim/config.hpp"
#include "rissim/errors.hpp"
#include "rissim/experiments.hpp"
#include "rissim/link.hpp"
#include "rissim/oracle.hpp"
#include "rissim/scattering.hpp"

namespace rissim::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,
  exit_config = 2,
  exit_scene = 3,
  exit_underresolved = 4,
};

struct Options {
  std::filesystem::path out_dir;  // empty: tables go to stdout where possible
  unsigned threads = 1;
  std::uint64_t seed = 0;
};

/// Shortest text that round-trips the double; throws on NaN/inf.
inline std::string number(double v, const char* what = "value") {
  if (!std::isfinite(v)) throw NonFiniteValue(std::string("non-finite ") + what);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

/// Angles are presentation values, printed to 15 digits so 30 degrees reads "30".
inline std::string angle(double radians, AngleUnit unit) {
  const double v = config_detail::angle_out(radians, unit);
  if (!std::isfinite(v)) throw NonFiniteValue("non-finite angle");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::string(buf) == "-0" ? "0" : buf;
}

inline const char* angle_suffix(AngleUnit u) { return u == AngleUnit::degrees ? "deg" : "rad"; }

inline std::ofstream open_output(const std::filesystem::path& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  std::ofstream f(dir / name, std::ios::binary);
  if (!f) throw Error("cannot write '" + (dir / name).string() + "'");
  return f;
}

inline double watts_to_dbm(double w) { return PowerResult::watts_to_dbm(w); }

}  // namespace detail

/// RCS table: sigma^M, sigma^R, sigma^C and the diffraction factor per angle quad.
inline int cmd_rcs(const RunConfig& config, const Options& opts, std::ostream& out) {
  const CellDims dims(config.surface, config.propagation.lambda);
  const DiffractionParams diffraction = config.diffraction();
  const char* u = detail::angle_suffix(config.angle_unit);

  std::ostringstream table;
  table << "# rissim rcs\n"
        << "# wavelength_m=" << number(dims.lambda()) << "\n"
        << "# cell_width_m=" << number(dims.d_v()) << " cell_length_m=" << number(dims.d_h()) << "\n"
        << "# mu=" << number(diffraction.mu()) << "\n"
        << "# sigma_metal_m2: metal cell RCS; sigma_ris_m2: RIS element RCS (metal RCS x diffraction factor);"
           " sigma_tang: cos^2(theta_i) cos^2(theta_s), dimensionless\n";
  table << "theta_i_" << u << ",phi_i_" << u << ",theta_s_" << u << ",phi_s_" << u
        << ",sigma_metal_m2,sigma_ris_m2,sigma_tang,diffraction_factor\n";
  for (const AngleQuad& q : config.rcs.quads()) {
    const auto a = [&](double r) { return detail::angle(r, config.angle_unit); };
    table << a(q.theta_i) << ',' << a(q.phi_i) << ',' << a(q.theta_s) << ',' << a(q.phi_s) << ','
          << number(rcs_metal_cell(q, dims), "metal RCS") << ','
          << number(rcs_ris_cell(q, dims, diffraction), "RIS RCS") << ',' << number(rcs_tang_cell(q), "Tang RCS")
          << ',' << number(diffraction_factor(q, dims, diffraction), "diffraction factor") << '\n';
  }

  if (opts.out_dir.empty()) {
    out << table.str();
  } else {
    auto f = detail::open_output(opts.out_dir, "rcs.csv");
    f << table.str();
    out << "wrote " << (opts.out_dir / "rcs.csv").string() << "\n";
  }
  return exit_ok;
}

/// CSV text for a sweep result.
inline std::string sweep_csv(const RunConfig& config, const SweepResult& result) {
  const SweepConfig& sc = *config.sweep;
  const bool by_distance = std::holds_alternative<DistanceSweep>(sc.plan.kind);
  const char* u = detail::angle_suffix(config.angle_unit);
  std::ostringstream csv;
  csv << "# rissim sweep\n";
  if (by_distance) {
    const auto& d = std::get<DistanceSweep>(sc.plan.kind);
    csv << "# kind=distance\n# x=distance_m\n# zenith_" << u << "=" << detail::angle(d.zenith, config.angle_unit)
        << "\n";
  } else {
    const auto& a = std::get<AngleSweep>(sc.plan.kind);
    csv << "# kind=angle\n# x=zenith_" << u << "\n# distance_m=" << number(a.distance) << "\n";
  }
  csv << "# wavelength_m=" << number(config.propagation.lambda) << "\n"
      << "# surface=" << config.surface.n_v << "x" << config.surface.n_h << " cell_width_m="
      << number(config.surface.d_v) << " cell_length_m=" << number(config.surface.d_h) << "\n"
      << "# mu=" << number(config.mu) << "\n"
      << "# far_field_boundary_m=" << number(far_field_boundary(config.surface, config.propagation.lambda)) << "\n"
      << "# models=";
  for (std::size_t i = 0; i < sc.entries.size(); ++i)
    csv << (i ? ";" : "") << sc.entries[i].label << ":" << sc.entries[i].rcs_model << ":" << sc.entries[i].policy;
  csv << "\nx";
  for (const auto& label : result.labels) csv << ",p_" << label << "_watts,p_" << label << "_dbm";
  csv << "\n";
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const SweepRow& row = result.rows[i];
    csv << (by_distance ? number(row.x, "sweep distance") : detail::angle(row.x, config.angle_unit));
    for (std::size_t m = 0; m < row.p_watts.size(); ++m) {
      const std::string what = "power for '" + result.labels[m] + "' at sweep point " + std::to_string(i);
      csv << ',' << number(row.p_watts[m], what.c_str()) << ','
          << number(detail::watts_to_dbm(row.p_watts[m]), what.c_str());
    }
    csv << "\n";
  }
  return csv.str();
}

inline int cmd_sweep(const RunConfig& config, const Options& opts, std::ostream& out) {
  if (!config.sweep) throw ConfigError("sweep", "the sweep command needs a 'sweep' section");
  const SweepResult result = run_sweep(config.sweep->plan, config.surface, config.propagation, opts.threads);
  const std::string csv = sweep_csv(config, result);
  const std::filesystem::path dir = opts.out_dir.empty() ? std::filesystem::path(".") : opts.out_dir;
  detail::open_output(dir, "sweep.csv") << csv;
  detail::open_output(dir, "sweep.meta.json") << to_json(config).dump(2) << "\n";
  out << "wrote " << (dir / "sweep.csv").string() << " (" << result.rows.size() << " rows)\n";
  return exit_ok;
}

inline int cmd_optimize(const RunConfig& config, const Options& opts, std::ostream& out) {
  const Scene scene = config.make_scene();
  scene.validate();
  const PropagationParams& params = config.propagation;
  const RcsModel model = RisModel{config.diffraction()};
  const std::vector<Complex> terms = element_terms(scene, params, model);

  const GreedyOptions options{config.optimize.levels, config.optimize.max_sweeps, config.optimize.amplitude_table};
  const GreedyResult greedy = optimize_phases_discrete(terms, options);
  const RisConfiguration continuous = optimize_phases_continuous(terms);

  const auto power = [&](const RisConfiguration& c) { return power_from_sum(params, configured_sum(terms, c, config.summation)); };
  // Every reported power goes through the same summation so the ordering is not blurred by rounding.
  const auto level_power = [&](const std::vector<int>& lv) {
    return power(RisConfiguration::discrete(lv, options.levels, options.amplitudes));
  };
  const double p_uniform = level_power(std::vector<int>(terms.size(), 0));
  const double p_start = level_power(greedy.quantized_start_levels);
  const double p_greedy = power(greedy.config);
  const double p_bound = power(continuous);

  const std::filesystem::path dir = opts.out_dir.empty() ? std::filesystem::path(".") : opts.out_dir;
  {
    auto f = detail::open_output(dir, "optimized_configuration.csv");
    f << "# rissim optimize: per-element phase levels, row-major from the most-negative (x, y) corner\n"
      << "# levels=" << options.levels << "\n"
      << "index,row,column,level,phase_rad,alpha\n";
    const auto n_v = static_cast<std::size_t>(config.surface.n_v);
    for (std::size_t n = 0; n < greedy.config.levels.size(); ++n)
      f << n << ',' << n / n_v << ',' << n % n_v << ',' << greedy.config.levels[n] << ','
        << number(greedy.config.responses[n].phi) << ',' << number(greedy.config.responses[n].alpha) << '\n';
  }
  {
    RunConfig reloadable = config;
    reloadable.ris_configuration = FixedConfiguration{options.levels, greedy.config.levels};
    detail::open_output(dir, "optimized_config.json") << to_json(reloadable).dump(2) << "\n";
  }

  const auto line = [&](const char* name, double w) {
    out << name << "_watts=" << number(w, name) << " " << name << "_dbm=" << number(detail::watts_to_dbm(w), name)
        << "\n";
  };
  out << "# rissim optimize\n"
      << "levels=" << options.levels << " max_sweeps=" << options.max_sweeps << " sweeps_run=" << greedy.sweeps
      << " converged=" << (greedy.converged ? "true" : "false") << "\n";
  line("p_uniform", p_uniform);
  line("p_quantized_start", p_start);
  line("p_greedy", p_greedy);
  line("p_continuous_bound", p_bound);
  if (config.ris_configuration) {
    const auto& fixed = *config.ris_configuration;
    const std::vector<double> amps = fixed.levels == options.levels ? options.amplitudes : std::vector<double>{};
    line("p_configured", power(RisConfiguration::discrete(fixed.phase_levels, fixed.levels, amps)));
  }
  out << "wrote " << (dir / "optimized_configuration.csv").string() << " and "
      << (dir / "optimized_config.json").string() << "\n";
  return exit_ok;
}

inline int cmd_oracle_check(const RunConfig& config, const Options& opts, std::ostream& out) {
  const OracleConfig& oc = config.oracle;
  const double lambda = config.propagation.lambda;
  const AngleGrid grid{oc.grid_step, oc.theta_max};
  const char* u = detail::angle_suffix(config.angle_unit);
  const auto a = [&](double r) { return detail::angle(r, config.angle_unit); };

  std::ostringstream report;
  report << "# rissim oracle-check\n"
      << "nodes=" << oc.quadrature.n_points_x << "x" << oc.quadrature.n_points_y
      << " rule=" << (oc.quadrature.rule == QuadratureRule::gauss_legendre ? "gauss_legendre" : "midpoint")
      << " grid_step_" << u << "=" << a(oc.grid_step) << " theta_max_" << u << "=" << a(oc.theta_max)
      << " threshold=" << number(oc.threshold) << "\n";

  double overall_max = 0.0, weighted_mean = 0.0;
  std::size_t total = 0;
  for (double size : oc.cell_sizes_wavelengths) {
    const CellDims dims(size * lambda, size * lambda, lambda);
    const OracleComparison r = compare_oracle_grid(
        dims, oc.quadrature, grid, [](const AngleQuad& q, const CellDims& d) { return rcs_metal_cell(q, d); },
        opts.threads);
    report << "cell=" << number(size) << "_lambda samples=" << r.samples
        << " max_rel_err=" << number(r.max_relative_error) << " mean_rel_err=" << number(r.mean_relative_error)
        << " worst_" << u << "=(" << a(r.worst.theta_i) << "," << a(r.worst.phi_i) << "," << a(r.worst.theta_s)
        << "," << a(r.worst.phi_s) << ")\n";
    overall_max = std::max(overall_max, r.max_relative_error);
    weighted_mean += r.mean_relative_error * static_cast<double>(r.samples);
    total += r.samples;
  }
  const bool pass = overall_max < oc.threshold;
  report << "overall max_rel_err=" << number(overall_max)
         << " mean_rel_err=" << number(total ? weighted_mean / static_cast<double>(total) : 0.0) << "\n"
         << "result: " << (pass ? "PASS" : "FAIL") << "\n";
  out << report.str();
  if (!opts.out_dir.empty()) detail::open_output(opts.out_dir, "oracle_check.txt") << report.str();
  return pass ? exit_ok : exit_failure;
}

/// Parses arguments, runs one subcommand and maps errors to exit codes.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Received-power simulator for RIS and metal-plate assisted links"};
  app.require_subcommand(1);
  std::string config_path;
  std::string out_dir;
  unsigned threads = 1;
  std::uint64_t seed = 0;

  const auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* opt = sub->add_option("--config", config_path, "JSON run configuration");
    if (needs_config) opt->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_option("--seed", seed, "seed for randomized helpers (physics is deterministic)");
  };
  CLI::App* rcs = app.add_subcommand("rcs", "tabulate element RCS models over angle quads");
  CLI::App* sweep = app.add_subcommand("sweep", "distance or zenith sweep comparing surface models");
  CLI::App* optimize = app.add_subcommand("optimize", "discrete phase optimization report");
  CLI::App* oracle = app.add_subcommand("oracle-check", "physical-optics quadrature vs closed-form RCS");
  add_common(rcs, false);
  add_common(sweep, true);
  add_common(optimize, false);
  add_common(oracle, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_config;
  }

  try {
    const RunConfig config = config_path.empty() ? parse_config(Json::object()) : load_config(config_path);
    const Options opts{out_dir, threads, seed};
    if (*rcs) return cmd_rcs(config, opts, out);
    if (*sweep) return cmd_sweep(config, opts, out);
    if (*optimize) return cmd_optimize(config, opts, out);
    return cmd_oracle_check(config, opts, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return exit_config;
  } catch (const SceneError& e) {
    err << "scene violation: " << e.what() << "\n";
    return exit_scene;
  } catch (const QuadratureUnderresolved& e) {
    err << "oracle underresolved: " << e.what() << "\n";
    return exit_underresolved;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
}

}  // namespace rissim::cli
