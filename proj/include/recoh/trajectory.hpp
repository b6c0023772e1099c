#pragma once

namespace recoh {

/// Symmetric electron path z(t) = (R / T^4)(t^2 - T^2)^2 on [-T, T].
///
/// 2R is the effective path separation and 2T the flight time. The
/// opposite leg of the loop follows -z(t).
class Trajectory {
 public:
  /// Throws DomainError unless both R and T are positive and finite.
  Trajectory(double half_separation, double half_time);

  double half_separation() const noexcept { return R_; }
  double half_time() const noexcept { return T_; }

  double position(double t) const;
  double velocity(double t) const;

  /// max |v_z| = 8 / (3 sqrt 3) * R / T, reached at t = +-T / sqrt 3.
  double max_speed() const noexcept;
  /// True when max_speed() exceeds the speed of light.
  bool superluminal() const noexcept { return superluminal_; }

 private:
  void check_time(double t) const;

  double R_;
  double T_;
  bool superluminal_;
};

}  // namespace recoh
