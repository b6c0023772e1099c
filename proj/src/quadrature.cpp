#include "recoh/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "recoh/errors.hpp"

namespace recoh {

GaussLegendreRule::GaussLegendreRule(int order) : nodes_(order), weights_(order) {
  if (order < 1) throw DomainError("Gauss-Legendre order must be >= 1");
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton on P_n starting from the Tricomi estimate of the i-th root.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p0 = 0.0;
      for (int j = 0; j < order; ++j) {
        const double p2 = p0;
        p0 = p1;
        p1 = ((2.0 * j + 1.0) * z * p0 - j * p2) / (j + 1.0);
      }
      dp = order * (z * p1 - p0) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    nodes_[i] = -z;
    nodes_[order - 1 - i] = z;
    weights_[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    weights_[order - 1 - i] = weights_[i];
  }
}

void QuadratureConfig::validate() const {
  if (nodes_per_period < 16)
    throw DomainError("nodes_per_period must be >= 16, got " + std::to_string(nodes_per_period));
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("tolerances must be > 0");
  switch (scheme) {
    case PanelRule::GaussLegendre2:
    case PanelRule::GaussLegendre4:
    case PanelRule::GaussLegendre8:
    case PanelRule::GaussLegendre16:
      return;
  }
  throw DomainError("unknown panel rule");
}

PanelGrid panel_grid(double a, double b, double rate, int nodes_per_period, PanelRule scheme) {
  const GaussLegendreRule rule(static_cast<int>(scheme));
  const double periods = std::abs(rate) * (b - a) / (2.0 * std::numbers::pi);
  const int panels =
      std::max(1, static_cast<int>(std::ceil(nodes_per_period * periods / rule.order())));
  const double h = (b - a) / panels;

  PanelGrid grid;
  grid.nodes.reserve(static_cast<std::size_t>(panels) * rule.order());
  grid.weights.reserve(grid.nodes.capacity());
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (int k = 0; k < rule.order(); ++k) {
      grid.nodes.push_back(mid + 0.5 * h * rule.nodes()[k]);
      grid.weights.push_back(0.5 * h * rule.weights()[k]);
    }
  }
  return grid;
}

QuadratureResult refine(const QuadratureConfig& cfg, const char* what,
                        const std::function<std::pair<std::complex<double>, int>(int)>& integral) {
  cfg.validate();
  const auto [coarse, coarse_nodes] = integral(cfg.nodes_per_period);
  const auto [fine, fine_nodes] = integral(2 * cfg.nodes_per_period);
  (void)coarse_nodes;

  const double delta = std::abs(fine.real() - coarse.real());
  const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(fine.real()));
  if (delta > tol)
    throw NonConvergence(std::string(what) + ": refinement changed the result by " +
                             std::to_string(delta) + " (tolerance " + std::to_string(tol) + ")",
                         delta, tol);

  const double re = std::abs(fine.real());
  const double residue = re > 0.0 ? std::abs(fine.imag()) / re : std::abs(fine.imag());
  return {fine.real(), residue, delta, fine_nodes};
}

}  // namespace recoh
