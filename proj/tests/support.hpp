#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace recoh::testing {

inline double rel_err(double value, double reference) {
  return std::abs(value - reference) / std::max(1e-300, std::abs(reference));
}

// Fixed-seed generator for property checks; reproducible across runs.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = 20240611) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

 private:
  std::mt19937_64 engine_;
};

// Uniform-grid average over one period; exact for trigonometric polynomials
// of degree below n.
template <class F>
double periodic_mean(F&& f, double start, double period, int n = 256) {
  double s = 0.0;
  for (int k = 0; k < n; ++k) s += f(start + period * k / n);
  return s / n;
}

// Composite Simpson on [a, b] with n (even) intervals.
template <class F>
double simpson(F&& f, double a, double b, int n = 20000) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

}  // namespace recoh::testing
