#pragma once

#include <complex>

namespace recoh {

/// Bogoliubov coefficients of the single-mode squeeze transformation
/// S^dag a S = mu a - nu a^dag.
struct Bogoliubov {
  double mu;               // cosh r
  std::complex<double> nu; // e^{i theta} sinh r
  double eta;              // sinh r = |nu|
};

/// Complex squeeze parameter zeta = r e^{i theta}.
///
/// theta is kept as given; equivalent() compares it modulo 2 pi.
class SqueezeState {
 public:
  /// Throws DomainError for r < 0 or non-finite input, RangeError for
  /// r > max_squeeze.
  SqueezeState(double r, double theta);

  double r() const noexcept { return r_; }
  double theta() const noexcept { return theta_; }
  /// theta reduced to [0, 2 pi).
  double reduced_theta() const noexcept;

  bool equivalent(const SqueezeState& other, double tol = 1e-12) const noexcept;

 private:
  double r_;
  double theta_;
};

/// Excited mode: angular frequency and box quantization volume.
class ModeSpec {
 public:
  ModeSpec(double omega_bar, double volume);

  double omega_bar() const noexcept { return omega_bar_; }
  double volume() const noexcept { return volume_; }

 private:
  double omega_bar_;
  double volume_;
};

Bogoliubov bogoliubov(const SqueezeState& state);

/// <a^dag a> = sinh^2 r.
double mean_photon_number(const SqueezeState& state);

/// mu cos(phase) + eta, evaluated as 2 eta cos^2(phase/2) + e^{-r} cos(phase)
/// so the near-cancellation at phase = pi survives large r.
double squeeze_bracket(const SqueezeState& state, double phase);

/// Renormalized energy density (eta / V) [mu cos(phase) + eta] omega_bar,
/// with phase = 2 k.x - theta.
double energy_density(const SqueezeState& state, const ModeSpec& mode, double phase);

/// Renormalized total energy eta^2 omega_bar over the quantization box.
double total_energy(const SqueezeState& state, const ModeSpec& mode);

}  // namespace recoh
