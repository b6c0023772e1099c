#include "recoh/squeezed_state.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "recoh/constants.hpp"
#include "recoh/errors.hpp"

namespace recoh {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double reduce_angle(double a) {
  double r = std::fmod(a, two_pi);
  if (r < 0.0) r += two_pi;
  return r >= two_pi ? 0.0 : r;
}

}  // namespace

SqueezeState::SqueezeState(double r, double theta) : r_(r), theta_(theta) {
  if (!std::isfinite(r) || !std::isfinite(theta))
    throw DomainError("squeeze parameters must be finite");
  if (r < 0.0) throw DomainError("squeeze magnitude r must be >= 0, got " + std::to_string(r));
  if (r > max_squeeze)
    throw RangeError("squeeze magnitude r = " + std::to_string(r) + " exceeds cap " +
                     std::to_string(max_squeeze));
}

double SqueezeState::reduced_theta() const noexcept { return reduce_angle(theta_); }

bool SqueezeState::equivalent(const SqueezeState& other, double tol) const noexcept {
  if (std::abs(r_ - other.r_) > tol) return false;
  double d = reduce_angle(theta_ - other.theta_);
  return d <= tol || two_pi - d <= tol;
}

ModeSpec::ModeSpec(double omega_bar, double volume) : omega_bar_(omega_bar), volume_(volume) {
  if (!(std::isfinite(omega_bar) && omega_bar > 0.0))
    throw DomainError("mode frequency must be positive and finite");
  if (!(std::isfinite(volume) && volume > 0.0))
    throw DomainError("quantization volume must be positive and finite");
}

Bogoliubov bogoliubov(const SqueezeState& state) {
  const double eta = std::sinh(state.r());
  return {std::cosh(state.r()), std::polar(eta, state.theta()), eta};
}

double mean_photon_number(const SqueezeState& state) {
  const double eta = std::sinh(state.r());
  return eta * eta;
}

double squeeze_bracket(const SqueezeState& state, double phase) {
  const double half = std::cos(0.5 * phase);
  return 2.0 * std::sinh(state.r()) * half * half + std::exp(-state.r()) * std::cos(phase);
}

double energy_density(const SqueezeState& state, const ModeSpec& mode, double phase) {
  if (!std::isfinite(phase)) throw DomainError("phase must be finite");
  return std::sinh(state.r()) / mode.volume() * squeeze_bracket(state, phase) * mode.omega_bar();
}

double total_energy(const SqueezeState& state, const ModeSpec& mode) {
  return mean_photon_number(state) * mode.omega_bar();
}

}  // namespace recoh
