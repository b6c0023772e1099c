#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>

#include "recoh/cli.hpp"
#include "recoh/errors.hpp"
#include "recoh/estimates.hpp"
#include "recoh/multimode_band.hpp"
#include "recoh/oracle.hpp"
#include "recoh/single_mode.hpp"

namespace recoh::cli {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double oracle_gate = 1e-6;

struct Setup {
  SqueezeState state;
  ModeSpec mode;
  Trajectory traj;
};

Setup physical(const Parameters& p) {
  const double lambda = 2.0 * pi / p.omega_bar_T;
  return {SqueezeState(p.r, p.theta),
          ModeSpec(p.omega_bar_T, std::pow(lambda, 3) / p.lambda3_over_V),
          Trajectory(p.ratio_RT, 1.0)};
}

std::string num(double v) { return format_number(v); }

void write_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << cells[i];
  }
  out << '\n';
}

double relative_error(double value, double reference) {
  const double diff = std::abs(value - reference);
  if (diff == 0.0) return 0.0;
  return diff / std::max(1e-30, std::abs(reference));
}

void warn_superluminal(const Trajectory& traj, std::ostream& err) {
  if (traj.superluminal())
    err << "warning: max |v_z| = " << num(traj.max_speed())
        << " exceeds the speed of light; the non-relativistic path model is outside its range\n";
}

std::string band_flags(const BandDiagnostics& d) {
  std::string flags;
  auto add = [&](bool ok, const char* name) {
    if (ok) return;
    if (!flags.empty()) flags += '|';
    flags += name;
  };
  add(d.narrow_band, "wide_band");
  add(d.short_flight, "long_flight");
  add(d.small_cone, "wide_cone");
  return flags.empty() ? "ok" : flags;
}

int run_single_mode(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Setup s = physical(cfg.params);
  warn_superluminal(s.traj, err);
  const auto phase = PhaseFunctionParams::for_mode(s.state, s.mode);
  const double w = s.mode.omega_bar();
  write_row(out, {"t0", "g", "W_R", "contrast_factor"});
  for (int k = 0; k < cfg.t0_grid; ++k) {
    const double t0 = k * pi / (w * cfg.t0_grid);
    const CoherenceResult c = w_r_of_t0(s.state, s.mode, s.traj, t0);
    write_row(out, {num(t0), num(g(s.state, phase, t0)), num(c.w_r), num(c.contrast_factor)});
  }
  return exit_ok;
}

int run_band(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Parameters& p = cfg.params;
  const Setup s = physical(p);
  warn_superluminal(s.traj, err);
  const BandSpec band(p.omega_bar_T, p.delta_omega_ratio * p.omega_bar_T, p.solid_angle);
  const double t0 = p.t0_omega / p.omega_bar_T;

  const double exact = band_w_r_exact(s.state, band, s.traj, BandAveraging::WindowAveraged, 0.0,
                                      cfg.quadrature);
  const double leading = band_w_r_leading(s.state, band, s.traj);
  const double exact_t0 = band_w_r_exact(s.state, band, s.traj, BandAveraging::AtEmissionTime, t0,
                                         cfg.quadrature);
  const double summed = mode_sum_oracle(s.state, band, s.traj, cfg.modes, t0);

  write_row(out, {"r", "omega_bar_T", "ratio_RT", "delta_omega_ratio", "solid_angle", "t0_omega",
                  "exact_windowed", "leading", "leading_rel_err", "exact_t0", "mode_sum",
                  "mode_sum_rel_err", "modes", "flags"});
  write_row(out, {num(p.r), num(p.omega_bar_T), num(p.ratio_RT), num(p.delta_omega_ratio),
                  num(p.solid_angle), num(p.t0_omega), num(exact), num(leading),
                  num(relative_error(exact, leading)), num(exact_t0), num(summed),
                  num(relative_error(summed, exact_t0)), std::to_string(cfg.modes),
                  band_flags(band_diagnostics(band, s.traj))});
  return exit_ok;
}

int run_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  static constexpr double omega_T_grid[] = {0.5, 1.0, 3.34, 10.0};
  static constexpr double r_grid[] = {0.0, 0.5, 1.0, 2.0};
  constexpr int t0_points = 8;

  write_row(out, {"omega_bar_T", "r", "t0", "closed", "quad", "rel_err"});
  double worst = 0.0;
  for (double x : omega_T_grid) {
    for (double r : r_grid) {
      Parameters p = cfg.params;
      p.omega_bar_T = x;
      p.r = r;
      const Setup s = physical(p);
      for (int k = 0; k < t0_points; ++k) {
        const double t0 = k * pi / (t0_points * x);
        const double closed = w_r_of_t0(s.state, s.mode, s.traj, t0).w_r;
        const double quad = quad_w_r(s.state, s.mode, s.traj, t0, cfg.quadrature).value;
        const double rel = relative_error(quad, closed);
        worst = std::max(worst, rel);
        write_row(out, {num(x), num(r), num(t0), num(closed), num(quad), num(rel)});
      }
    }
  }
  err << "max rel_err = " << num(worst) << " (gate " << num(oracle_gate) << ")\n";
  return worst <= oracle_gate ? exit_ok : exit_numerical;
}

int run_cavity(const RunConfig& cfg, std::ostream& out) {
  const Parameters& p = cfg.params;
  const CavityEstimate e =
      cavity_estimate(CavityScenario::from_groups(p.ratio_RT, p.lambda3_over_V, p.R_over_lambda));
  write_row(out, {"ratio_RT", "lambda3_over_V", "R_over_lambda", "x", "averaged", "exact_F"});
  write_row(out, {num(p.ratio_RT), num(p.lambda3_over_V), num(p.R_over_lambda), num(e.x),
                  num(e.averaged), num(e.exact_F)});
  return exit_ok;
}

int run_empty_space(const RunConfig& cfg, std::ostream& out) {
  const Parameters& p = cfg.params;
  const EmptySpaceScenario scn{p.ratio_RT, p.delta_omega_ratio, p.solid_angle, p.omega_bar_T};
  write_row(out, {"ratio_RT", "bandwidth_ratio", "solid_angle", "omega_bar_T", "F", "estimate",
                  "flags"});
  write_row(out, {num(p.ratio_RT), num(p.delta_omega_ratio), num(p.solid_angle),
                  num(p.omega_bar_T), num(envelope_F(p.omega_bar_T)),
                  num(empty_space_estimate(scn)), scn.small_factors() ? "ok" : "large_factor"});
  return exit_ok;
}

const std::vector<std::string> sweep_columns{
    "r", "theta", "omega_bar_T", "ratio_RT", "lambda3_over_V", "t0_omega", "delta_omega_ratio",
    "solid_angle", "g", "W_R", "contrast_factor", "W_bar", "delta_t", "g_tilde", "W_tilde",
    "max_bound", "w0", "unitarity_total", "band_exact", "band_leading", "band_rel_err", "status"};

std::vector<std::string> sweep_row(const Parameters& p, const QuadratureConfig& quad) {
  std::vector<std::string> cells{num(p.r),           num(p.theta),
                                 num(p.omega_bar_T), num(p.ratio_RT),
                                 num(p.lambda3_over_V), num(p.t0_omega),
                                 num(p.delta_omega_ratio), num(p.solid_angle)};
  const std::size_t derived = sweep_columns.size() - cells.size() - 1;
  try {
    const Setup s = physical(p);
    const double w = s.mode.omega_bar();
    const double t0 = p.t0_omega / w;
    const auto phase = PhaseFunctionParams::for_mode(s.state, s.mode);
    const CoherenceResult c = w_r_of_t0(s.state, s.mode, s.traj, t0);
    const UnitaritySum u = unitarity_sum(s.state, s.mode, s.traj);
    const BandSpec band(w, p.delta_omega_ratio * w, p.solid_angle);
    const double exact =
        band_w_r_exact(s.state, band, s.traj, BandAveraging::WindowAveraged, 0.0, quad);
    const double leading = band_w_r_leading(s.state, band, s.traj);
    const std::vector<double> values{g(s.state, phase, t0),
                                     c.w_r,
                                     c.contrast_factor,
                                     long_time_average(s.state, s.mode, s.traj),
                                     emission_window(s.state, phase).width,
                                     windowed_average_g(s.state),
                                     windowed_average_w_r(s.state, s.mode, s.traj),
                                     u.w_r_max,
                                     u.w0,
                                     u.total,
                                     exact,
                                     leading,
                                     relative_error(exact, leading)};
    for (double v : values) {
      if (!std::isfinite(v)) throw RangeError("non-finite derived value");
      cells.push_back(num(v));
    }
    cells.emplace_back("ok");
  } catch (const RangeError&) {
    cells.resize(8 + derived);
    cells.emplace_back("range_error");
  } catch (const DomainError&) {
    cells.resize(8 + derived);
    cells.emplace_back("domain_error");
  }
  return cells;
}

int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  {
    const Trajectory base(cfg.params.ratio_RT, 1.0);
    bool any_fast = base.superluminal();
    for (const auto& a : cfg.axes)
      if (a.name == "ratio-RT")
        for (double v : a.values) any_fast = any_fast || Trajectory(v, 1.0).superluminal();
    if (any_fast) err << "warning: some rows exceed the speed of light on the path (R/T too large)\n";
  }

  write_row(out, sweep_columns);
  std::vector<std::size_t> index(cfg.axes.size(), 0);
  std::size_t row = 0;
  while (true) {
    Parameters p = cfg.params;
    for (std::size_t a = 0; a < cfg.axes.size(); ++a)
      parameter(p, cfg.axes[a].name) = cfg.axes[a].values[index[a]];
    try {
      write_row(out, sweep_row(p, cfg.quadrature));
    } catch (const NonConvergence& e) {
      throw NonConvergence("row " + std::to_string(row) + ": " + e.what(), e.delta(),
                           e.tolerance());
    }
    ++row;
    // Row-major: the last declared axis varies fastest.
    std::size_t a = cfg.axes.size();
    while (a > 0) {
      --a;
      if (++index[a] < cfg.axes[a].values.size()) break;
      index[a] = 0;
      if (a == 0) return exit_ok;
    }
    if (cfg.axes.empty()) return exit_ok;
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  int status = exit_ok;
  try {
    switch (config.command) {
      case Command::SingleMode: status = run_single_mode(config, buffer, err); break;
      case Command::Band: status = run_band(config, buffer, err); break;
      case Command::Oracle: status = run_oracle(config, buffer, err); break;
      case Command::EstimateCavity: status = run_cavity(config, buffer); break;
      case Command::EstimateEmptySpace: status = run_empty_space(config, buffer); break;
      case Command::Sweep: status = run_sweep(config, buffer, err); break;
    }
  } catch (const NonConvergence& e) {
    err << "error: numerical non-convergence: " << e.what() << '\n';
    return exit_numerical;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return exit_config;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_config;
  }

  if (config.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(config.output, std::ios::binary | std::ios::trunc);
    file << buffer.str();
    if (!file) {
      err << "error: field 'output': cannot write '" << config.output << "'\n";
      return exit_config;
    }
  }
  return status;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Squeezed-vacuum electron recoherence: closed forms, quadrature oracle, estimates"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;
  std::vector<std::string> axis_specs;
  int panel_order = static_cast<int>(cfg.quadrature.scheme);
  Parameters& p = cfg.params;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "CSV output path (default: standard output)");
    sub->add_option("--config", config_path, "key = value config file with [section] headers");
  };
  auto add_quadrature = [&](CLI::App* sub) {
    sub->add_option("--nodes-per-period", cfg.quadrature.nodes_per_period)->capture_default_str();
    sub->add_option("--panel-order", panel_order, "Gauss-Legendre points per panel (2, 4, 8, 16)")
        ->capture_default_str();
    sub->add_option("--rel-tol", cfg.quadrature.rel_tol)->capture_default_str();
    sub->add_option("--abs-tol", cfg.quadrature.abs_tol)->capture_default_str();
  };
  struct Flag {
    const char* name;
    double* target;
    const char* help;
  };
  const std::vector<Flag> flags{
      {"r", &p.r, "squeeze magnitude"},
      {"theta", &p.theta, "squeeze phase (rad)"},
      {"omega-bar-T", &p.omega_bar_T, "mode frequency times half flight time"},
      {"ratio-RT", &p.ratio_RT, "half path separation over half flight time"},
      {"lambda3-over-V", &p.lambda3_over_V, "wavelength cubed over quantization volume"},
      {"t0-omega", &p.t0_omega, "emission time times mode frequency"},
      {"delta-omega-ratio", &p.delta_omega_ratio, "half-bandwidth over centre frequency"},
      {"solid-angle", &p.solid_angle, "solid angle of the excited cone (sr)"},
      {"R-over-lambda", &p.R_over_lambda, "half path separation over wavelength"},
  };
  auto add_params = [&](CLI::App* sub, std::initializer_list<std::string_view> names) {
    for (const Flag& f : flags)
      for (auto n : names)
        if (n == f.name)
          sub->add_option(std::string("--") + f.name, *f.target, f.help)->capture_default_str();
  };

  auto* single = app.add_subcommand("single-mode", "W_R over one period of emission times");
  add_params(single, {"r", "theta", "omega-bar-T", "ratio-RT", "lambda3-over-V"});
  single->add_option("--t0-grid", cfg.t0_grid, "number of emission times in [0, pi/omega)")
      ->capture_default_str();
  add_common(single);

  auto* band = app.add_subcommand("band", "finite-bandwidth multimode result");
  add_params(band, {"r", "theta", "omega-bar-T", "ratio-RT", "delta-omega-ratio", "solid-angle",
                    "t0-omega"});
  band->add_option("--modes", cfg.modes, "modes in the discrete sum")->capture_default_str();
  add_quadrature(band);
  add_common(band);

  auto* oracle = app.add_subcommand("oracle", "closed form vs quadrature on the reference grid");
  add_params(oracle, {"theta", "ratio-RT", "lambda3-over-V"});
  oracle->add_option("--grid", cfg.grid, "grid name")->capture_default_str();
  add_quadrature(oracle);
  add_common(oracle);

  auto* estimate = app.add_subcommand("estimate", "order-of-magnitude scenario estimates");
  estimate->require_subcommand(1);
  auto* cavity = estimate->add_subcommand("cavity", "single mode in a cavity");
  add_params(cavity, {"ratio-RT", "lambda3-over-V", "R-over-lambda"});
  add_common(cavity);
  auto* empty = estimate->add_subcommand("empty-space", "band of modes in empty space");
  add_params(empty, {"ratio-RT", "delta-omega-ratio", "solid-angle", "omega-bar-T"});
  add_common(empty);

  auto* sweep = app.add_subcommand("sweep", "Cartesian-product parameter sweep");
  add_params(sweep, {"r", "theta", "omega-bar-T", "ratio-RT", "lambda3-over-V", "t0-omega",
                     "delta-omega-ratio", "solid-angle"});
  sweep->add_option("--axis", axis_specs, "name=grid (list a,b,c or start:stop:count[:log])");
  add_quadrature(sweep);
  add_common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return exit_config;
  }

  CLI::App* leaf = nullptr;
  if (single->parsed()) { cfg.command = Command::SingleMode; leaf = single; }
  else if (band->parsed()) { cfg.command = Command::Band; leaf = band; }
  else if (oracle->parsed()) { cfg.command = Command::Oracle; leaf = oracle; }
  else if (cavity->parsed()) { cfg.command = Command::EstimateCavity; leaf = cavity; }
  else if (empty->parsed()) { cfg.command = Command::EstimateEmptySpace; leaf = empty; }
  else { cfg.command = Command::Sweep; leaf = sweep; }

  try {
    for (const auto& spec : axis_specs) cfg.axes.push_back(parse_axis(spec));

    if (!config_path.empty()) {
      static const std::set<std::string> quadrature_keys{"nodes-per-period", "panel-order",
                                                         "rel-tol", "abs-tol"};
      const bool cli_axes = !cfg.axes.empty();
      for (const ConfigEntry& e : read_config_file(config_path)) {
        const std::string where = config_path + ":" + std::to_string(e.line) + ": ";
        if (e.section == "sweep") {
          if (leaf != sweep) throw ConfigError(where + "[sweep] applies only to the sweep subcommand");
          if (!cli_axes) {
            try {
              cfg.axes.push_back(parse_axis(e.key + "=" + e.value));
            } catch (const ConfigError& ce) {
              throw ConfigError(where + ce.what());
            }
          }
          continue;
        }
        const bool in_section = e.section == "quadrature" ? quadrature_keys.contains(e.key)
                                : e.section == "output"   ? e.key == "output"
                                                          : !quadrature_keys.contains(e.key) &&
                                                              e.key != "output";
        CLI::Option* opt = e.key == "config" ? nullptr : leaf->get_option_no_throw("--" + e.key);
        if (opt == nullptr || !in_section)
          throw ConfigError(where + "field '" + e.key + "' is not valid in [" + e.section +
                            "] for subcommand " + leaf->get_name());
        if (opt->count() > 0) continue;  // command line wins
        try {
          opt->add_result(e.value);
          opt->run_callback();
        } catch (const CLI::Error& ce) {
          throw ConfigError(where + "field '" + e.key + "': " + ce.what());
        }
      }
    }

    if (panel_order != 2 && panel_order != 4 && panel_order != 8 && panel_order != 16)
      throw ConfigError("field 'panel-order': must be 2, 4, 8 or 16");
    cfg.quadrature.scheme = static_cast<PanelRule>(panel_order);
    validate(cfg);
    if (!cfg.output.empty()) {
      std::ofstream probe(cfg.output, std::ios::app);
      if (!probe) throw ConfigError("field 'output': cannot open '" + cfg.output + "' for writing");
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return exit_config;
  }

  return run(cfg, out, err);
}

}  // namespace recoh::cli
