// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "recoh/constants.hpp"
#include "recoh/estimates.hpp"
#include "recoh/multimode_band.hpp"
#include "recoh/oracle.hpp"
#include "recoh/single_mode.hpp"

using namespace recoh;
constexpr double pi = std::numbers::pi;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(1e-30, std::abs(b)); }

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// unit-T mode at omega_bar_T with lambda^3 / V = 1
ModeSpec unit_mode(double x) { return ModeSpec(x, std::pow(2.0 * pi / x, 3)); }

Verdict oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  const Trajectory traj(0.1, 1.0);
  double worst = 0.0;
  for (double x : {0.5, 1.0, 3.34, 10.0})
    for (double r : {0.0, 0.5, 1.0, 2.0})
      for (int k = 0; k < 8; ++k) {
        const SqueezeState s(r, 0.0);
        const ModeSpec mode = unit_mode(x);
        const double t0 = k * pi / (8.0 * x);
        const double closed = w_r_of_t0(s, mode, traj, t0).w_r;
        worst = std::max(worst, rel(quad_w_r(s, mode, traj, t0).value, closed));
      }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= 1e-6 && secs < 60.0, fmt("max rel err %.3g, %.2f s", worst, secs)};
}

Verdict f_extremum() {
  const FMaximum m = locate_F_max();
  return {std::abs(m.x_star - 3.34) <= 0.01 && std::abs(m.f_star - 96.4) <= 0.2,
          fmt("x* = %.6f, F(x*) = %.4f", m.x_star, m.f_star)};
}

Verdict recoherence_bound() {
  const ModeSpec mode = unit_mode(3.34);
  const Trajectory traj(0.1, 1.0);
  const double bound = max_recoherence(mode, traj);
  bool ok = true;
  double last = 0.0;
  for (double r : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const double w = windowed_average_w_r(SqueezeState(r, 0.0), mode, traj);
    ok = ok && w > 0.0 && w <= bound;
    last = w / bound;
  }
  return {ok && last >= 0.999, fmt("ratio at r = 10: %.6f", last)};
}

Verdict long_time_negativity() {
  bool ok = true;
  int cells = 0;
  for (double r : {0.0, 0.5, 1.0, 2.0})
    for (double x : {0.5, 1.0, 3.34, 10.0})
      for (double rt : {0.05, 0.1, 0.2, 0.4}) {
        const double w = long_time_average(SqueezeState(r, 0.0), unit_mode(x), Trajectory(rt, 1.0));
        ok = ok && (r == 0.0 ? w == 0.0 : w < 0.0);
        ++cells;
      }
  return {ok, fmt("%.0f grid points", cells)};
}

Verdict unitarity() {
  bool ok = true;
  double worst = 0.0;
  const Trajectory traj(0.1, 1.0);
  for (double x : {0.5, 1.0, 3.34, 10.0}) {
    const ModeSpec mode = unit_mode(x);
    const double expected =
        -4.0 * pi * fine_structure / (3.0 * mode.volume() * mode.omega_bar()) * envelope_M(mode, traj);
    for (double r : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0}) {
      const SqueezeState s(r, 0.0);
      const UnitaritySum u = unitarity_sum(s, mode, traj);
      worst = std::max(worst, rel(u.total, expected));
      for (int k = 0; k < 64; ++k) {
        const double t0 = k * pi / (64.0 * mode.omega_bar());
        ok = ok && u.w0 + w_r_of_t0(s, mode, traj, t0).w_r <= 0.0;
      }
    }
  }
  return {ok && worst <= 1e-10, fmt("max rel err of total %.3g", worst)};
}

Verdict window_limits() {
  const ModeSpec mode = unit_mode(3.34);
  const auto width = [&](double r) {
    const SqueezeState s(r, 0.0);
    return emission_window(s, PhaseFunctionParams::for_mode(s, mode)).width;
  };
  const double beta = 2.0 * mode.omega_bar();
  const double small = rel(width(1e-9), pi / beta);
  const double large = width(10.0) * beta * std::exp(10.0) / 4.0;
  return {small <= 1e-6 && std::abs(large - 1.0) <= 1e-3,
          fmt("r -> 0 rel err %.3g, scaled width at r = 10: %.6f", small, large)};
}

Verdict band_leading_order() {
  const SqueezeState s(1.0, 0.0);
  const Trajectory traj(0.1, 1.0);
  const auto error = [&](double ratio) {
    const BandSpec band(3.34, ratio * 3.34, 0.1);
    const double leading = band_w_r_leading(s, band, traj);
    return rel(band_w_r_exact(s, band, traj, BandAveraging::WindowAveraged), leading);
  };
  bool ok = true;
  double ratio = 0.1;
  double prev = error(ratio);
  std::ostringstream factors;
  for (int k = 0; k < 4; ++k) {
    ratio /= 2.0;
    const double e = error(ratio);
    const double f = prev / e;
    ok = ok && f >= 3.5 && f <= 4.5;
    factors << (k ? ", " : "") << fmt("%.4f", f);
    prev = e;
  }
  return {ok, "factors " + factors.str()};
}

Verdict mode_sum_convergence() {
  const SqueezeState s(1.0, 0.0);
  const BandSpec band(3.34, 0.334, 0.1);
  const Trajectory traj(0.1, 1.0);
  double worst = 0.0;
  for (double t0 : {0.0, 0.3, 1.0}) {
    const double continuum = band_w_r_exact(s, band, traj, BandAveraging::AtEmissionTime, t0);
    worst = std::max(worst, rel(mode_sum_oracle(s, band, traj, 256, t0), continuum));
  }
  return {worst <= 1e-3, fmt("max rel err %.3g", worst)};
}

Verdict scenario_estimates() {
  const double cavity = cavity_estimate(CavityScenario::from_groups(0.1)).averaged;
  const double empty = empty_space_estimate({0.1, 0.1, 0.1, 3.34});
  return {cavity >= 3e-8 && cavity <= 3e-7 && empty >= 3e-7 && empty <= 3e-6,
          fmt("cavity %.4g, empty space %.4g", cavity, empty)};
}

Verdict energy_identities() {
  bool negative = true;
  double worst_avg = 0.0;
  double worst_min = 0.0;
  for (double w : {0.5, 3.34}) {
    const ModeSpec mode(w, 2.0);
    for (double r : {1e-3, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
      const SqueezeState s(r, 0.4);
      const double eta = std::sinh(r);
      const int n = 256;
      double sum = 0.0;
      double grid_min = INFINITY;
      for (int k = 0; k < n; ++k) {
        const double rho = energy_density(s, mode, 2.0 * pi * k / n);
        sum += rho;
        grid_min = std::min(grid_min, rho);
      }
      worst_avg = std::max(worst_avg, rel(sum / n, eta * eta * w / mode.volume()));
      const double at_min = energy_density(s, mode, pi);
      worst_min = std::max(worst_min, rel(at_min, w / mode.volume() * g_min(s)));
      negative = negative && at_min < 0.0 && at_min <= grid_min;
    }
  }
  return {negative && worst_avg <= 1e-10 && worst_min <= 1e-10,
          fmt("average rel err %.3g, minimum rel err %.3g", worst_avg, worst_min)};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Verdict determinism() {
  const std::string base = std::string("\"") + RECOH_CLI_PATH + "\" sweep --config \"" + RECOH_CONFIG_DIR +
                           "/acceptance_sweep.ini\" --output ";
  const std::string a = "acceptance_sweep_a.csv";
  const std::string b = "acceptance_sweep_b.csv";
  std::remove(a.c_str());
  std::remove(b.c_str());
  if (std::system((base + a).c_str()) != 0 || std::system((base + b).c_str()) != 0)
    return {false, "CLI run failed"};
  const std::string ta = slurp(a);
  const std::string tb = slurp(b);
  const auto rows = std::count(ta.begin(), ta.end(), '\n');
  return {!ta.empty() && ta == tb, fmt("%.0f lines, %.0f bytes", static_cast<double>(rows),
                                       static_cast<double>(ta.size()))};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"F extremum", f_extremum},
      {"recoherence bound", recoherence_bound},
      {"long-time average negativity", long_time_negativity},
      {"unitarity", unitarity},
      {"emission window limits", window_limits},
      {"band leading order", band_leading_order},
      {"mode-sum convergence", mode_sum_convergence},
      {"scenario estimates", scenario_estimates},
      {"energy identities", energy_identities},
      {"determinism", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %2d %s: %s\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str());
    failed += !v.pass;
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
