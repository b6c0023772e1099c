#pragma once

namespace recoh {

/// F(x) = (32 / x^3)^2 [(x^2 - 3) sin x + 3 x cos x]^2, x > 0.
double envelope_F(double x);

/// Large-argument form 1024 sin^2 x / x^2.
double envelope_F_large(double x);

struct FMaximum {
  double x_star;
  double f_star;
};

/// Global maximum of F, found as the root of d(bracket / x^3)/dx in [3, 3.7].
FMaximum locate_F_max();

/// Single excited mode in a cavity of volume V at wavelength lambda = 2 pi / omega.
struct CavityScenario {
  double wavelength;
  double volume;
  double half_separation;  // R
  double half_time;        // T

  /// Throws DomainError unless every field is positive.
  void validate() const;

  /// Builds the scenario in units lambda = 1 from R/T, lambda^3 / V and R / lambda.
  static CavityScenario from_groups(double ratio_RT, double lambda3_over_V = 1.0,
                                    double R_over_lambda = 1.0);
};

struct CavityEstimate {
  double x;          // 2 pi T / lambda
  double averaged;   // large-x F with sin^2 replaced by 1/2
  double exact_F;    // exact F(x); equals the single-mode recoherence bound
};

CavityEstimate cavity_estimate(const CavityScenario& scn);

/// Finite band of modes in empty space, all quantities dimensionless.
struct EmptySpaceScenario {
  double ratio_RT;
  double bandwidth_ratio;  // delta_omega / omega_bar
  double solid_angle;
  double omega_bar_T;

  void validate() const;
  /// True when every small factor is at most 1.
  bool small_factors() const noexcept;
};

/// (alpha / (6 pi^2)) (R/T)^2 (delta_omega / omega) F(omega T) dOmega, the
/// window-averaged band result at g~ = -1/3.
double empty_space_estimate(const EmptySpaceScenario& scn);

}  // namespace recoh
