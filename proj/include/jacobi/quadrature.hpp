#pragma once

#include <jacobi/sphere.hpp>

#include <vector>

namespace jacobi {

/// Gauss quadrature on [-1,1] with weight (1-t^2)^alpha, via Golub-Welsch
/// on the symmetric Jacobi recurrence.  Exact for polynomial degree 2n-1.
struct GaussJacobiRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussJacobiRule gauss_jacobi(int n, double alpha);

struct QuadratureNode {
  SpherePoint point;
  double weight;
};

/// Deterministic quadrature on S^m.  m=1 is the uniform trapezoid rule;
/// m>=2 is the iterated product rule in hyperspherical coordinates
/// (Gauss-Jacobi in each polar angle, uniform in azimuth).  Antipodally
/// symmetric, exact on low-degree polynomials, spectrally accurate on
/// smooth integrands.
class QuadratureGrid {
 public:
  /// m in {1,...,8}, level >= 1.  Throws std::invalid_argument otherwise.
  static QuadratureGrid build(int m, int level);

  int dim() const { return m_; }
  int level() const { return level_; }
  const std::vector<QuadratureNode>& nodes() const { return nodes_; }
  double volume() const;  // sum of weights

  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (const auto& node : nodes_) acc += node.weight * f(node.point);
    return acc;
  }

 private:
  QuadratureGrid(int m, int level, std::vector<QuadratureNode> nodes)
      : m_(m), level_(level), nodes_(std::move(nodes)) {}

  int m_ = 0;
  int level_ = 0;
  std::vector<QuadratureNode> nodes_;
};

}  // namespace jacobi
