#include "recoh/oracle.hpp"

#include <array>
#include <complex>
#include <numbers>

#include "recoh/constants.hpp"

namespace recoh {

namespace {

using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

// One leg of the closed loop C = C1 - C2. C2 mirrors C1 through z = 0 and is
// traversed backwards in the loop.
struct Leg {
  double mirror;       // z-velocity on this leg is mirror * v_z(t)
  double orientation;  // +1 along C1, -1 for the reversed C2
};
constexpr std::array<Leg, 2> loop_legs{{{+1.0, +1.0}, {-1.0, -1.0}}};

// oint_C dz oint_C dz' K(t, t') on a tensor grid, summed over the four leg pairs.
template <class Kernel>
std::pair<cplx, int> loop_integral(const Trajectory& traj, double rate, int nodes_per_period,
                                   PanelRule scheme, Kernel&& kernel) {
  const double T = traj.half_time();
  const PanelGrid grid = panel_grid(-T, T, rate, nodes_per_period, scheme);
  const std::size_t n = grid.nodes.size();

  cplx total{0.0, 0.0};
  for (const Leg& a : loop_legs) {
    for (const Leg& b : loop_legs) {
      cplx leg_sum{0.0, 0.0};
      for (std::size_t i = 0; i < n; ++i) {
        const double t = grid.nodes[i];
        const double va = a.orientation * a.mirror * traj.velocity(t);
        cplx row{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
          const double tp = grid.nodes[j];
          const double vb = b.orientation * b.mirror * traj.velocity(tp);
          row += grid.weights[j] * vb * kernel(t, tp);
        }
        leg_sum += grid.weights[i] * va * row;
      }
      total += leg_sum;
    }
  }
  return {total, static_cast<int>(n)};
}

}  // namespace

QuadratureResult quad_w_r(const SqueezeState& state, const ModeSpec& mode,
                          const Trajectory& traj, double t0, const QuadratureConfig& cfg) {
  const Bogoliubov b = bogoliubov(state);
  const double w = mode.omega_bar();
  const double norm = 1.0 / (mode.volume() * w);
  const cplx mu_nu = b.mu * b.nu;
  const cplx mu_nu_conj = b.mu * std::conj(b.nu);
  const double nu2 = std::norm(b.nu);

  // Renormalized <{A^z(x), A^z(x')}> with both times shifted by the emission time.
  auto kernel = [&](double t, double tp) {
    const double s = t + tp + 2.0 * t0;
    const double d = t - tp;
    const cplx forward = -mu_nu * std::exp(-I * (w * s)) + nu2 * std::exp(-I * (w * d));
    const cplx conjugate = -mu_nu_conj * std::exp(I * (w * s)) + nu2 * std::exp(I * (w * d));
    return norm * (forward + conjugate);
  };

  return refine(cfg, "quad_w_r", [&](int npp) {
    auto [value, nodes] = loop_integral(traj, w, npp, cfg.scheme, kernel);
    return std::pair{-pi * fine_structure * value, nodes};
  });
}

QuadratureResult quad_w0(const ModeSpec& mode, const Trajectory& traj,
                         const QuadratureConfig& cfg) {
  const double w = mode.omega_bar();
  const double norm = 1.0 / (2.0 * mode.volume() * w);
  auto kernel = [&](double t, double tp) {
    const double d = t - tp;
    return norm * (std::exp(-I * (w * d)) + std::exp(I * (w * d)));
  };
  return refine(cfg, "quad_w0", [&](int npp) {
    auto [value, nodes] = loop_integral(traj, w, npp, cfg.scheme, kernel);
    return std::pair{-pi * fine_structure * value, nodes};
  });
}

QuadratureResult quad_envelope(const ModeSpec& mode, const Trajectory& traj,
                               const QuadratureConfig& cfg) {
  const double w = mode.omega_bar();
  const double T = traj.half_time();
  return refine(cfg, "quad_envelope", [&](int npp) {
    const PanelGrid grid = panel_grid(-T, T, w, npp, cfg.scheme);
    double s = 0.0;
    for (std::size_t i = 0; i < grid.nodes.size(); ++i)
      s += grid.weights[i] * traj.velocity(grid.nodes[i]) * std::sin(w * grid.nodes[i]);
    return std::pair{cplx{s * s, 0.0}, static_cast<int>(grid.nodes.size())};
  });
}

}  // namespace recoh
