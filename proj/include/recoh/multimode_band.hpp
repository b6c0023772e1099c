#pragma once

#include "recoh/quadrature.hpp"
#include "recoh/squeezed_state.hpp"
#include "recoh/trajectory.hpp"

namespace recoh {

/// Top-hat band of excited modes: f(omega) = 1 on
/// [omega_bar - delta_omega, omega_bar + delta_omega], zero elsewhere,
/// all inside a small cone of solid angle `solid_angle` about the y axis.
/// Squeeze parameters are shared by every mode in the band.
class BandSpec {
 public:
  /// Throws DomainError unless 0 < delta_omega < omega_bar and solid_angle > 0.
  BandSpec(double omega_bar, double delta_omega, double solid_angle);

  double omega_bar() const noexcept { return omega_bar_; }
  double delta_omega() const noexcept { return delta_omega_; }
  double solid_angle() const noexcept { return solid_angle_; }
  double lower() const noexcept { return omega_bar_ - delta_omega_; }
  double upper() const noexcept { return omega_bar_ + delta_omega_; }

 private:
  double omega_bar_;
  double delta_omega_;
  double solid_angle_;
};

/// Validity flags of the leading-order treatment. Each is true when the
/// corresponding small parameter is at most band_small_parameter.
struct BandDiagnostics {
  bool narrow_band;   // delta_omega / omega_bar
  bool short_flight;  // delta_omega * T
  bool small_cone;    // solid_angle / (4 pi)
};

inline constexpr double band_small_parameter = 0.1;

BandDiagnostics band_diagnostics(const BandSpec& band, const Trajectory& traj);

/// (1 / omega^3) [sin x + 3 cos x / x - 3 sin x / x^2]^2 with x = omega T.
double band_integrand(double omega, const Trajectory& traj);

enum class BandAveraging { WindowAveraged, AtEmissionTime };

/// Band W_R from the frequency integral over the top-hat band. WindowAveraged
/// replaces the emission-time bracket by the window average g~(r);
/// AtEmissionTime keeps eta [mu cos(2 omega t0 - theta) + eta] under the integral.
double band_w_r_exact(const SqueezeState& state, const BandSpec& band, const Trajectory& traj,
                      BandAveraging averaging, double t0 = 0.0,
                      const QuadratureConfig& cfg = {});

/// Leading order in delta_omega / omega_bar of the window-averaged band W_R.
double band_w_r_leading(const SqueezeState& state, const BandSpec& band, const Trajectory& traj);

/// Same, with the window average of g supplied directly (g~ -> -1/3 gives the bound).
double band_w_r_leading(double g_average, const BandSpec& band, const Trajectory& traj);

/// Discrete sum over n_modes modes at the midpoints of equal frequency cells,
/// each carrying the phase-space weight omega^2 d omega dOmega / (2 pi)^3 in
/// place of 1/V. Throws DomainError for n_modes < 1.
double mode_sum_oracle(const SqueezeState& state, const BandSpec& band, const Trajectory& traj,
                       int n_modes, double t0);

}  // namespace recoh
