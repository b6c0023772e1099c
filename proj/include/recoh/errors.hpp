#pragma once

#include <stdexcept>
#include <string>

namespace recoh {

/// Input outside the mathematical domain of an operation (negative r, |t| > T, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Result not representable in double precision.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Successive quadrature refinements disagree by more than the tolerance.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double delta, double tolerance)
      : std::runtime_error(what), delta_(delta), tolerance_(tolerance) {}

  double delta() const noexcept { return delta_; }
  double tolerance() const noexcept { return tolerance_; }

 private:
  double delta_;
  double tolerance_;
};

}  // namespace recoh
