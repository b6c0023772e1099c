#include "recoh/estimates.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "recoh/constants.hpp"
#include "recoh/errors.hpp"
#include "recoh/single_mode.hpp"

namespace recoh {

namespace {

constexpr double pi = std::numbers::pi;

void require_positive(double v, const char* name) {
  if (!(std::isfinite(v) && v > 0.0)) throw DomainError(std::string(name) + " must be > 0");
}

}  // namespace

double envelope_F(double x) {
  require_positive(x, "F argument");
  const double s = path_bracket_scaled(x);
  return 1024.0 * std::pow(x, 4) * s * s;
}

double envelope_F_large(double x) {
  require_positive(x, "F argument");
  const double s = std::sin(x) / x;
  return 1024.0 * s * s;
}

FMaximum locate_F_max() {
  // F'(x) = 0  <=>  x b'(x) = 3 b(x) for b = (x^2 - 3) sin x + 3 x cos x.
  // Beyond this first lobe F decays like 1024 / x^2, so this root is the global maximum.
  auto stationary = [](double x) {
    return (x * x * x - 9.0 * x) * std::cos(x) + (9.0 - 4.0 * x * x) * std::sin(x);
  };
  std::uintmax_t iterations = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve(
      stationary, 3.0, 3.7, boost::math::tools::eps_tolerance<double>(), iterations);
  const double x = 0.5 * (lo + hi);
  return {x, envelope_F(x)};
}

void CavityScenario::validate() const {
  require_positive(wavelength, "wavelength");
  require_positive(volume, "volume");
  require_positive(half_separation, "R");
  require_positive(half_time, "T");
}

CavityScenario CavityScenario::from_groups(double ratio_RT, double lambda3_over_V,
                                           double R_over_lambda) {
  require_positive(ratio_RT, "R/T");
  require_positive(lambda3_over_V, "lambda^3/V");
  require_positive(R_over_lambda, "R/lambda");
  return {1.0, 1.0 / lambda3_over_V, R_over_lambda, R_over_lambda / ratio_RT};
}

CavityEstimate cavity_estimate(const CavityScenario& scn) {
  scn.validate();
  const double x = 2.0 * pi * scn.half_time / scn.wavelength;
  const double ratio = scn.half_separation / scn.half_time;
  const double pref = fine_structure / (12.0 * pi * pi) *
                      std::pow(scn.wavelength, 3) / scn.volume * ratio * ratio;
  return {x, pref * 512.0 / (x * x), pref * envelope_F(x)};
}

void EmptySpaceScenario::validate() const {
  require_positive(ratio_RT, "R/T");
  require_positive(bandwidth_ratio, "delta_omega/omega_bar");
  require_positive(solid_angle, "solid angle");
  require_positive(omega_bar_T, "omega_bar T");
}

bool EmptySpaceScenario::small_factors() const noexcept {
  return ratio_RT <= 1.0 && bandwidth_ratio <= 1.0 && solid_angle <= 1.0;
}

double empty_space_estimate(const EmptySpaceScenario& scn) {
  scn.validate();
  return fine_structure / (6.0 * pi * pi) * scn.ratio_RT * scn.ratio_RT * scn.bandwidth_ratio *
         envelope_F(scn.omega_bar_T) * scn.solid_angle;
}

}  // namespace recoh
