#include "recoh/single_mode.hpp"

#include <cmath>
#include <numbers>

#include "recoh/constants.hpp"
#include "recoh/errors.hpp"

namespace recoh {

namespace {

constexpr double pi = std::numbers::pi;

// log of the largest finite double: e^w overflows above this.
constexpr double max_exponent = 709.78;

double checked(double value, const char* what) {
  if (!std::isfinite(value)) throw RangeError(what);
  return value;
}

}  // namespace

PhaseFunctionParams::PhaseFunctionParams(double alpha0_, double beta_)
    : alpha0(alpha0_), beta(beta_) {
  if (!std::isfinite(alpha0)) throw DomainError("phase offset must be finite");
  if (!(std::isfinite(beta) && beta > 0.0)) throw DomainError("phase rate beta must be > 0");
}

PhaseFunctionParams PhaseFunctionParams::for_mode(const SqueezeState& state,
                                                  const ModeSpec& mode, double offset) {
  return {offset - state.theta(), 2.0 * mode.omega_bar()};
}

double path_bracket_scaled(double x) {
  if (std::abs(x) >= 1.0) return path_bracket(x) / std::pow(x, 5);
  // sum_{n>=2} (-1)^{n+1} 4 n (n-1) x^{2n-4} / (2n+1)!
  const double x2 = x * x;
  double p = 1.0 / 120.0;  // x^{2n-4} / (2n+1)! at n = 2
  double sum = 0.0;
  for (int n = 2; n < 40; ++n) {
    const double term = (n % 2 == 0 ? -1.0 : 1.0) * 4.0 * n * (n - 1) * p;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    p *= x2 / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
  }
  return sum;
}

double path_bracket(double x) {
  if (std::abs(x) < 1.0) return path_bracket_scaled(x) * std::pow(x, 5);
  return (x * x - 3.0) * std::sin(x) + 3.0 * x * std::cos(x);
}

double mode_coupling(const ModeSpec& mode) {
  return 8.0 * pi * fine_structure / (mode.volume() * mode.omega_bar());
}

double envelope_M(const ModeSpec& mode, const Trajectory& traj) {
  const double x = mode.omega_bar() * traj.half_time();
  // bracket / x^4 = x * bracket / x^5
  const double amplitude = 16.0 * traj.half_separation() * x * path_bracket_scaled(x);
  return checked(amplitude * amplitude, "envelope M overflows");
}

double g(const SqueezeState& state, const PhaseFunctionParams& params, double t0) {
  return std::sinh(state.r()) * squeeze_bracket(state, params.alpha0 + params.beta * t0);
}

double g_min(const SqueezeState& state) { return 0.5 * std::expm1(-2.0 * state.r()); }

double g_max(const SqueezeState& state) {
  return checked(0.5 * std::expm1(2.0 * state.r()), "g_max overflows");
}

double window_half_angle(const SqueezeState& state) {
  return 2.0 * std::atan(std::exp(-state.r()));
}

CoherenceResult w_r_of_t0(const SqueezeState& state, const ModeSpec& mode,
                          const Trajectory& traj, double t0) {
  const double phase = 2.0 * mode.omega_bar() * t0 - state.theta();
  const double w = checked(-mode_coupling(mode) * std::sinh(state.r()) *
                               squeeze_bracket(state, phase) * envelope_M(mode, traj),
                           "W_R overflows");
  if (w > max_exponent) throw RangeError("contrast factor e^W_R overflows");
  return {w, std::exp(w)};
}

double long_time_average(const SqueezeState& state, const ModeSpec& mode,
                         const Trajectory& traj) {
  return checked(-mode_coupling(mode) * mean_photon_number(state) * envelope_M(mode, traj),
                 "long-time average overflows");
}

EmissionWindow emission_window(const SqueezeState& state, const PhaseFunctionParams& params) {
  const double centre = (pi - params.alpha0) / params.beta;
  if (state.r() == 0.0) {
    const double half = 0.5 * pi / params.beta;
    return {centre - half, centre + half, pi / params.beta, true};
  }
  const double xi = window_half_angle(state);
  return {centre - xi / params.beta, centre + xi / params.beta, 2.0 * xi / params.beta, false};
}

double windowed_average_g(const SqueezeState& state) {
  const double r = state.r();
  if (r == 0.0) return 0.0;
  const double u = std::exp(-r);
  if (u > 0.5) {
    const double eta = std::sinh(r);
    return -eta / window_half_angle(state) + eta * eta;
  }
  // With u = e^{-r}: eta xi - 1 = u^2 S, S = sum_{k>=1} (-1)^k u^{2k-2} 4k / (4k^2 - 1),
  // so g~ = (1 - u^2) S / (2 xi / u) with no cancellation between eta / xi and eta^2.
  const double u2 = u * u;
  double power = 1.0;
  double s = 0.0;
  for (int k = 1; k < 80; ++k) {
    const double term = (k % 2 == 0 ? 1.0 : -1.0) * power * 4.0 * k / (4.0 * k * k - 1.0);
    s += term;
    if (std::abs(term) <= 1e-18 * std::abs(s)) break;
    power *= u2;
  }
  const double xi_over_u = 2.0 * std::atan(u) / u;
  return (1.0 - u2) * s / (2.0 * xi_over_u);
}

double windowed_average_w_r(const SqueezeState& state, const ModeSpec& mode,
                            const Trajectory& traj) {
  return -mode_coupling(mode) * envelope_M(mode, traj) * windowed_average_g(state);
}

double max_recoherence(const ModeSpec& mode, const Trajectory& traj) {
  return mode_coupling(mode) * envelope_M(mode, traj) / 3.0;
}

double vacuum_w0(const ModeSpec& mode, const Trajectory& traj) {
  return -0.5 * mode_coupling(mode) * envelope_M(mode, traj);
}

UnitaritySum unitarity_sum(const SqueezeState& /*state*/, const ModeSpec& mode,
                           const Trajectory& traj) {
  const double w0 = vacuum_w0(mode, traj);
  const double bound = max_recoherence(mode, traj);
  return {w0, bound, w0 + bound};
}

}  // namespace recoh
