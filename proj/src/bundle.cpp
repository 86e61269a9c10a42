#include <jacobi/bundle.hpp>
#include <jacobi/quadrature.hpp>

#include <cmath>

namespace jacobi {

namespace {

// 4th-order Runge-Kutta integration of the transport equation
// v'(s) = A(s) v(s) for matrix-valued A, from 0 to t.
template <class RHS>
Mat integrate_transport(int dim, double t, int steps, RHS&& rhs) {
  Mat P = Mat::Identity(dim, dim);
  const double h = t / steps;
  double s = 0.0;
  for (int i = 0; i < steps; ++i) {
    const Mat k1 = rhs(s) * P;
    const Mat k2 = rhs(s + 0.5 * h) * (P + 0.5 * h * k1);
    const Mat k3 = rhs(s + 0.5 * h) * (P + 0.5 * h * k2);
    const Mat k4 = rhs(s + h) * (P + h * k3);
    P += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    s += h;
  }
  return P;
}

}  // namespace

Mat VectorBundle::transport(const SpherePoint& x, const Vec& v,
                            double t) const {
  // Generic fallback: integrate v' = -(d Pi/ds) complement correction,
  // written as v' = Pi'(s) v with Pi the fiber projector along the geodesic.
  const double speed = v.norm();
  if (speed == 0.0 || t == 0.0) return Mat::Identity(ambient_dim(), ambient_dim());
  const double dh = 1e-5;
  auto rhs = [&](double s) {
    const Mat Pp = fiber_projector(geodesic(x, v, s + dh));
    const Mat Pm = fiber_projector(geodesic(x, v, s - dh));
    return Mat((Pp - Pm) / (2.0 * dh));
  };
  Mat P = integrate_transport(ambient_dim(), t, 20, rhs);
  return fiber_projector(geodesic(x, v, t)) * P;
}

Mat VectorBundle::curvature_derivative(const SpherePoint&, const Vec&,
                                       const Vec&, const Vec&) const {
  throw CapabilityError(
      "bundle does not carry a closed-form curvature derivative");
}

Mat SphereTangentBundle::fiber_projector(const SpherePoint& x) const {
  const Vec& p = x.coords();
  return Mat::Identity(m_ + 1, m_ + 1) - p * p.transpose();
}

Mat SphereTangentBundle::curvature(const SpherePoint&, const Vec& X,
                                   const Vec& Y) const {
  return X * Y.transpose() - Y * X.transpose();
}

Mat SphereTangentBundle::transport(const SpherePoint& x, const Vec& v,
                                   double t) const {
  const int n = m_ + 1;
  const double speed = v.norm();
  if (speed == 0.0) return Mat::Identity(n, n);
  const Vec vhat = v / speed;
  const Vec& p = x.coords();
  const double phase = t * speed;
  // rotate the (x, vhat) plane, fix its orthogonal complement
  Mat P = Mat::Identity(n, n);
  P += (std::cos(phase) - 1.0) * (vhat * vhat.transpose() + p * p.transpose());
  P += std::sin(phase) * (p * vhat.transpose() - vhat * p.transpose());
  return P;
}

AbelianCurvedBundle::AbelianCurvedBundle(int m, LinearFunction l1,
                                         LinearFunction l2)
    : m_(m), l1_(std::move(l1)), l2_(std::move(l2)) {
  if (l1_.ambient_dim() != m + 1 || l2_.ambient_dim() != m + 1)
    throw std::invalid_argument("AbelianCurvedBundle: dimension mismatch");
}

double AbelianCurvedBundle::sigma(const SpherePoint& x, const Vec& X) const {
  return l1_(x) * grad_linear(l2_, x).dot(X);
}

Mat AbelianCurvedBundle::curvature(const SpherePoint& x, const Vec& X,
                                   const Vec& Y) const {
  // d(l1 dl2) = dl1 wedge dl2
  const Vec g1 = grad_linear(l1_, x);
  const Vec g2 = grad_linear(l2_, x);
  const double c = g1.dot(X) * g2.dot(Y) - g1.dot(Y) * g2.dot(X);
  Mat J0(2, 2);
  J0 << 0.0, -1.0, 1.0, 0.0;
  return c * J0;
}

Mat AbelianCurvedBundle::transport(const SpherePoint& x, const Vec& v,
                                   double t) const {
  const double speed = v.norm();
  if (speed == 0.0 || t == 0.0) return Mat::Identity(2, 2);
  // Transport solves u' = -sigma(gamma') J0 u; abelian, so it is the
  // rotation through -int_0^t sigma(gamma'(s)) ds.  The integrand is a
  // trigonometric polynomial of degree 2 in s, which an 8-node Gauss
  // rule integrates exactly.
  const GaussJacobiRule rule = gauss_jacobi(8, 0.0);
  double theta = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double s = 0.5 * t * (rule.nodes[i] + 1.0);
    const SpherePoint gs = geodesic(x, v, s);
    // gamma'(s) = speed * (-sin(s*speed) x + cos(s*speed) vhat)
    const Vec vhat = v / speed;
    const Vec gdot = speed * (-std::sin(s * speed) * x.coords() +
                              std::cos(s * speed) * vhat);
    theta += 0.5 * t * rule.weights[i] * sigma(gs, gdot);
  }
  Mat P(2, 2);
  P << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
  return P;  // exp(-theta J0)
}

Mat AbelianCurvedBundle::curvature_derivative(const SpherePoint& x,
                                              const Vec& Z, const Vec& X,
                                              const Vec& Y) const {
  // R = (dl1 ^ dl2) J0; the adjoint term vanishes (abelian), and
  // (nabla_Z dl)(X) = -l <Z,X> on the sphere.
  const Vec g1 = grad_linear(l1_, x);
  const Vec g2 = grad_linear(l2_, x);
  const double v1 = l1_(x);
  const double v2 = l2_(x);
  auto ddl = [&](double lval, const Vec& W1, const Vec& W2) {
    return -lval * W1.dot(W2);
  };
  const double c = ddl(v1, Z, X) * g2.dot(Y) + g1.dot(X) * ddl(v2, Z, Y) -
                   ddl(v2, Z, X) * g1.dot(Y) - g2.dot(X) * ddl(v1, Z, Y);
  Mat J0(2, 2);
  J0 << 0.0, -1.0, 1.0, 0.0;
  return c * J0;
}

}  // namespace jacobi
