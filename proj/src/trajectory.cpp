#include "recoh/trajectory.hpp"

#include <cmath>
#include <string>

#include "recoh/errors.hpp"

namespace recoh {

Trajectory::Trajectory(double half_separation, double half_time)
    : R_(half_separation), T_(half_time), superluminal_(false) {
  if (!(std::isfinite(R_) && R_ > 0.0)) throw DomainError("path half-separation R must be > 0");
  if (!(std::isfinite(T_) && T_ > 0.0)) throw DomainError("half flight time T must be > 0");
  superluminal_ = max_speed() > 1.0;
}

void Trajectory::check_time(double t) const {
  if (!(std::abs(t) <= T_))
    throw DomainError("time " + std::to_string(t) + " outside [-T, T]");
}

double Trajectory::position(double t) const {
  check_time(t);
  const double s = t * t - T_ * T_;
  const double T2 = T_ * T_;
  return R_ * (s / T2) * (s / T2);
}

double Trajectory::velocity(double t) const {
  check_time(t);
  const double T2 = T_ * T_;
  return 4.0 * R_ * t * (t * t - T2) / (T2 * T2);
}

double Trajectory::max_speed() const noexcept {
  return 8.0 / (3.0 * std::sqrt(3.0)) * R_ / T_;
}

}  // namespace recoh
