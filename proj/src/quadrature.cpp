#include <jacobi/quadrature.hpp>

#include <cmath>

namespace jacobi {

namespace {

// First moment of the weight (1-t^2)^alpha on [-1,1].
double weight_mass(double alpha) {
  return std::sqrt(M_PI) *
         std::exp(std::lgamma(alpha + 1.0) - std::lgamma(alpha + 1.5));
}

}  // namespace

GaussJacobiRule gauss_jacobi(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: n must be >= 1");
  if (alpha <= -1.0)
    throw std::invalid_argument("gauss_jacobi: alpha must exceed -1");

  // Golub-Welsch on the symmetric Jacobi recurrence (a = b = alpha):
  // diagonal is zero, beta_k as in Gautschi's r_jacobi.
  Mat T = Mat::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + 2.0 * alpha;
    const double beta = 4.0 * k * (k + alpha) * (k + alpha) * (k + 2.0 * alpha) /
                        (s * s * (s + 1.0) * (s - 1.0));
    T(k, k - 1) = T(k - 1, k) = std::sqrt(beta);
  }

  Eigen::SelfAdjointEigenSolver<Mat> es(T);
  const double mu0 = weight_mass(alpha);

  GaussJacobiRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()[i];
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

QuadratureGrid QuadratureGrid::build(int m, int level) {
  if (m < 1 || m > 8)
    throw std::invalid_argument(
        "QuadratureGrid: dimension m must lie in {1,...,8}, got m=" +
        std::to_string(m));
  if (level < 1)
    throw std::invalid_argument("QuadratureGrid: level must be >= 1");

  // Azimuth circle: uniform trapezoid, even count keeps the grid
  // antipodally symmetric.
  const int n_phi = m == 1 ? 8 * level + 8 : 4 * level + 4;
  std::vector<Vec> points;
  std::vector<double> weights;
  points.reserve(n_phi);
  for (int k = 0; k < n_phi; ++k) {
    const double phi = 2.0 * M_PI * k / n_phi;
    Vec p(2);
    p << std::cos(phi), std::sin(phi);
    points.push_back(std::move(p));
    weights.push_back(2.0 * M_PI / n_phi);
  }

  // Wrap one polar angle per dimension: a point of S^d is
  // (cos t, sin t * y) with y in S^{d-1} and weight sin^{d-1} t dt.
  const int n_polar = 2 * level + 2;
  for (int d = 2; d <= m; ++d) {
    const GaussJacobiRule rule = gauss_jacobi(n_polar, 0.5 * (d - 2));
    std::vector<Vec> next_points;
    std::vector<double> next_weights;
    next_points.reserve(points.size() * rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double u = rule.nodes[i];
      const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
      for (std::size_t j = 0; j < points.size(); ++j) {
        Vec p(d + 1);
        p[0] = u;
        p.tail(d) = s * points[j];
        next_points.push_back(std::move(p));
        next_weights.push_back(rule.weights[i] * weights[j]);
      }
    }
    points = std::move(next_points);
    weights = std::move(next_weights);
  }

  std::vector<QuadratureNode> nodes;
  nodes.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    nodes.push_back(QuadratureNode{SpherePoint(points[i]), weights[i]});
  return QuadratureGrid(m, level, std::move(nodes));
}

double QuadratureGrid::volume() const {
  double acc = 0.0;
  for (const auto& node : nodes_) acc += node.weight;
  return acc;
}

}  // namespace jacobi
