#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace recoh {

/// Gauss-Legendre nodes and weights on [-1, 1].
class GaussLegendreRule {
 public:
  explicit GaussLegendreRule(int order);

  int order() const noexcept { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Fixed-order composite rule identifier: points per Gauss-Legendre panel.
enum class PanelRule { GaussLegendre2 = 2, GaussLegendre4 = 4, GaussLegendre8 = 8,
                       GaussLegendre16 = 16 };

struct QuadratureConfig {
  int nodes_per_period = 32;
  PanelRule scheme = PanelRule::GaussLegendre8;
  double rel_tol = 1e-8;
  double abs_tol = 1e-14;

  /// Throws DomainError when nodes_per_period < 16 or a tolerance is not positive.
  void validate() const;
};

/// Abscissae and weights of a composite rule on [a, b].
struct PanelGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Composite grid with enough panels to place nodes_per_period nodes in every
/// period of an oscillation with angular rate `rate` across [a, b]. At least
/// one panel is always used.
PanelGrid panel_grid(double a, double b, double rate, int nodes_per_period, PanelRule scheme);

struct QuadratureResult {
  double value;
  double imag_residue;      // |Im| / |Re| of the assembled integral
  double refinement_delta;  // |fine - coarse|
  int nodes;                // nodes per dimension of the fine evaluation
};

/// Evaluates `integral(nodes_per_period)` at cfg.nodes_per_period and twice
/// that, and throws NonConvergence when the two disagree by more than
/// max(abs_tol, rel_tol |fine|). `integral` returns the complex value and
/// the node count it used.
QuadratureResult refine(const QuadratureConfig& cfg, const char* what,
                        const std::function<std::pair<std::complex<double>, int>(int)>& integral);

}  // namespace recoh
