#include "recoh/multimode_band.hpp"

#include <cmath>
#include <numbers>

#include "recoh/constants.hpp"
#include "recoh/errors.hpp"
#include "recoh/single_mode.hpp"

namespace recoh {

namespace {

constexpr double pi = std::numbers::pi;

// dOmega / (2 pi)^3 from the continuum phase-space measure.
double cone_measure(const BandSpec& band) { return band.solid_angle() / std::pow(2.0 * pi, 3); }

// -2 e^2 (16 R / T^2)^2 dOmega / (2 pi)^3
double band_prefactor(const BandSpec& band, const Trajectory& traj) {
  const double T = traj.half_time();
  const double a = 16.0 * traj.half_separation() / (T * T);
  return -2.0 * charge_squared * a * a * cone_measure(band);
}

}  // namespace

BandSpec::BandSpec(double omega_bar, double delta_omega, double solid_angle)
    : omega_bar_(omega_bar), delta_omega_(delta_omega), solid_angle_(solid_angle) {
  if (!(std::isfinite(omega_bar) && omega_bar > 0.0))
    throw DomainError("band centre frequency must be > 0");
  if (!(std::isfinite(delta_omega) && delta_omega > 0.0 && delta_omega < omega_bar))
    throw DomainError("half-bandwidth must satisfy 0 < delta_omega < omega_bar");
  if (!(std::isfinite(solid_angle) && solid_angle > 0.0))
    throw DomainError("solid angle must be > 0");
}

BandDiagnostics band_diagnostics(const BandSpec& band, const Trajectory& traj) {
  return {band.delta_omega() / band.omega_bar() <= band_small_parameter,
          band.delta_omega() * traj.half_time() <= band_small_parameter,
          band.solid_angle() / (4.0 * pi) <= band_small_parameter};
}

double band_integrand(double omega, const Trajectory& traj) {
  const double x = omega * traj.half_time();
  // [sin x + 3 cos x / x - 3 sin x / x^2] = x^3 * path_bracket_scaled(x)
  const double bracket = x * x * x * path_bracket_scaled(x);
  return bracket * bracket / (omega * omega * omega);
}

double band_w_r_exact(const SqueezeState& state, const BandSpec& band, const Trajectory& traj,
                      BandAveraging averaging, double t0, const QuadratureConfig& cfg) {
  const double T = traj.half_time();
  const double eta = std::sinh(state.r());
  const bool windowed = averaging == BandAveraging::WindowAveraged;
  if (!windowed && !std::isfinite(t0)) throw DomainError("emission time must be finite");
  const double rate = 2.0 * T + (windowed ? 0.0 : 2.0 * std::abs(t0));

  const QuadratureResult q = refine(cfg, "band integral", [&](int npp) {
    const PanelGrid grid = panel_grid(band.lower(), band.upper(), rate, npp, cfg.scheme);
    double sum = 0.0;
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
      const double w = grid.nodes[i];
      double weight = band_integrand(w, traj);
      if (!windowed) weight *= eta * squeeze_bracket(state, 2.0 * w * t0 - state.theta());
      sum += grid.weights[i] * weight;
    }
    return std::pair{std::complex<double>{sum, 0.0}, static_cast<int>(grid.nodes.size())};
  });

  const double pref = band_prefactor(band, traj);
  return windowed ? pref * windowed_average_g(state) * q.value : pref * q.value;
}

double band_w_r_leading(double g_average, const BandSpec& band, const Trajectory& traj) {
  const double T = traj.half_time();
  const double x = band.omega_bar() * T;
  const double s = path_bracket_scaled(x);
  const double F = 1024.0 * std::pow(x, 4) * s * s;  // (32 / x^3)^2 bracket^2
  const double ratio = traj.half_separation() / T;
  return -charge_squared * ratio * ratio * g_average * cone_measure(band) * F *
         (band.delta_omega() / band.omega_bar());
}

double band_w_r_leading(const SqueezeState& state, const BandSpec& band, const Trajectory& traj) {
  return band_w_r_leading(windowed_average_g(state), band, traj);
}

double mode_sum_oracle(const SqueezeState& state, const BandSpec& band, const Trajectory& traj,
                       int n_modes, double t0) {
  if (n_modes < 1) throw DomainError("mode sum needs at least one mode");
  const Bogoliubov b = bogoliubov(state);
  const double R = traj.half_separation();
  const double T = traj.half_time();
  const double cell = 2.0 * band.delta_omega() / n_modes;

  double sum = 0.0;
  for (int j = 0; j < n_modes; ++j) {
    const double w = band.lower() + (j + 0.5) * cell;
    const double inv_volume = cone_measure(band) * w * w * cell;
    const double x = w * T;
    const double shape =
        std::sin(x) + 3.0 * std::cos(x) / x - 3.0 * std::sin(x) / (x * x);
    const double amp = 16.0 * R / (w * w * w * T * T);
    const double occupation =
        b.mu * b.eta * std::cos(2.0 * w * t0 - state.theta()) + b.eta * b.eta;
    sum += -2.0 * inv_volume * charge_squared * w * occupation * amp * amp * shape * shape;
  }
  return sum;
}

}  // namespace recoh
