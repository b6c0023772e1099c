#pragma once

#include "recoh/squeezed_state.hpp"
#include "recoh/trajectory.hpp"

namespace recoh {

/// Phase of the emission-time dependence: alpha0 + beta * t0.
///
/// for_mode() uses the convention of the W_R closed form, 2 omega t0 - theta,
/// i.e. alpha0 = offset - theta. A nonzero offset (e.g. omega_bar * T) only
/// translates everything in t0; widths, averages, extrema and bounds are
/// unaffected.
struct PhaseFunctionParams {
  double alpha0;
  double beta;

  PhaseFunctionParams(double alpha0, double beta);
  static PhaseFunctionParams for_mode(const SqueezeState& state, const ModeSpec& mode,
                                      double offset = 0.0);
};

/// Emission times [t_i, t_f] for which g < 0 (W_R > 0).
struct EmissionWindow {
  double t_i;
  double t_f;
  double width;
  /// r == 0: g vanishes identically and the window is the limiting pi / beta.
  bool degenerate;
};

struct CoherenceResult {
  double w_r;
  double contrast_factor;  // e^{w_r}

  bool recoheres() const noexcept { return contrast_factor > 1.0; }
};

struct UnitaritySum {
  double w0;       // vacuum contribution of the mode
  double w_r_max;  // recoherence bound
  double total;    // w0 + w_r_max
};

/// (x^2 - 3) sin x + 3 x cos x. Uses the Taylor series for x < 1, where the
/// closed form cancels down to -x^5/15.
double path_bracket(double x);

/// path_bracket(x) / x^5, finite as x -> 0 (limit -1/15).
double path_bracket_scaled(double x);

/// 8 pi alpha / (V omega_bar), the common prefactor of every single-mode W.
double mode_coupling(const ModeSpec& mode);

/// M = (16 R / (omega T)^4)^2 [(omega^2 T^2 - 3) sin omega T + 3 omega T cos omega T]^2.
double envelope_M(const ModeSpec& mode, const Trajectory& traj);

/// g(r, t0) = eta [mu cos(alpha0 + beta t0) + eta].
double g(const SqueezeState& state, const PhaseFunctionParams& params, double t0);

/// Local minimum of g over t0: eta (eta - mu) = -(1 - e^{-2r}) / 2.
double g_min(const SqueezeState& state);
/// Local maximum of g over t0: eta (eta + mu) = (e^{2r} - 1) / 2.
double g_max(const SqueezeState& state);

/// xi = arccos(eta / mu) = arccos(tanh r), evaluated as 2 atan(e^{-r}).
double window_half_angle(const SqueezeState& state);

/// W_R for electrons emitted at t0.
CoherenceResult w_r_of_t0(const SqueezeState& state, const ModeSpec& mode,
                          const Trajectory& traj, double t0);

/// Average of W_R over emission times: -(8 pi alpha / (V omega)) eta^2 M.
double long_time_average(const SqueezeState& state, const ModeSpec& mode,
                         const Trajectory& traj);

/// The n = 0 window, centred where alpha0 + beta t0 = pi.
EmissionWindow emission_window(const SqueezeState& state, const PhaseFunctionParams& params);

/// Average of g over the emission window: -eta / xi + eta^2, in (-1/3, 0).
double windowed_average_g(const SqueezeState& state);

/// Average of W_R over the emission window.
double windowed_average_w_r(const SqueezeState& state, const ModeSpec& mode,
                            const Trajectory& traj);

/// Supremum of windowed_average_w_r over r: (8 pi alpha / (3 V omega)) M.
double max_recoherence(const ModeSpec& mode, const Trajectory& traj);

/// Vacuum contribution of the mode: -(4 pi alpha / (V omega)) M.
double vacuum_w0(const ModeSpec& mode, const Trajectory& traj);

UnitaritySum unitarity_sum(const SqueezeState& state, const ModeSpec& mode,
                           const Trajectory& traj);

}  // namespace recoh
