#include <jacobi/sphere.hpp>

#include <cmath>

namespace jacobi {

std::string to_string(Method m) {
  return m == Method::analytic ? "analytic" : "fd";
}

Method method_from_string(const std::string& s) {
  if (s == "analytic") return Method::analytic;
  if (s == "fd") return Method::fd;
  throw std::invalid_argument("unknown method '" + s + "'");
}

ToleranceProfile ToleranceProfile::preset(const std::string& name) {
  ToleranceProfile p;
  p.name = name;
  if (name == "default") return p;
  if (name == "coarse") {
    p.fd_residual *= 10.0;
    p.fd_vs_analytic *= 10.0;
    p.bochner_residual *= 10.0;
    p.adjointness_rel *= 10.0;
    return p;
  }
  throw std::invalid_argument("unknown tolerance preset '" + name + "'");
}

SpherePoint::SpherePoint(Vec coords) : x_(std::move(coords)) {
  if (x_.size() < 2)
    throw std::invalid_argument("SpherePoint needs ambient dimension >= 2");
  const double r = x_.norm();
  if (r < 1e-12)
    throw std::invalid_argument("SpherePoint: cannot normalize near-zero vector");
  x_ /= r;
}

std::vector<LinearFunction> LinearFunction::coordinate_basis(int m) {
  std::vector<LinearFunction> basis;
  basis.reserve(m + 1);
  for (int i = 0; i <= m; ++i) {
    Vec a = Vec::Zero(m + 1);
    a[i] = 1.0;
    basis.emplace_back(std::move(a));
  }
  return basis;
}

Vec project_tangent(const SpherePoint& x, const Vec& w) {
  return w - w.dot(x.coords()) * x.coords();
}

Vec grad_linear(const LinearFunction& l, const SpherePoint& x) {
  return l.coefficients() - l(x) * x.coords();
}

namespace {

void require_tangent(const SpherePoint& x, const Vec& v, const char* what) {
  if (v.size() != x.coords().size())
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  const double vn = v.norm();
  if (std::abs(v.dot(x.coords())) > 1e-8 * std::max(1.0, vn))
    throw std::invalid_argument(std::string(what) + ": vector not tangent at x");
}

}  // namespace

double hessian_linear(const LinearFunction& l, const SpherePoint& x,
                      const Vec& X, const Vec& Y) {
  require_tangent(x, X, "hessian_linear");
  require_tangent(x, Y, "hessian_linear");
  return -l(x) * X.dot(Y);
}

double hessian_linear_fd(const LinearFunction& l, const SpherePoint& x,
                         const Vec& X, const Vec& Y, double h) {
  require_tangent(x, X, "hessian_linear_fd");
  require_tangent(x, Y, "hessian_linear_fd");
  // Hess(V,V) = d^2/dt^2 l(exp_x(tV)); polarize for distinct arguments.
  auto diag = [&](const Vec& V) {
    const double f0 = l(x);
    const double fp = l(geodesic(x, V, h));
    const double fm = l(geodesic(x, V, -h));
    return (fp - 2.0 * f0 + fm) / (h * h);
  };
  const Vec S = X + Y;
  const Vec D = X - Y;
  return 0.25 * (diag(S) - diag(D));
}

TangentFrame tangent_frame(const SpherePoint& x) {
  const Vec& p = x.coords();
  const int n = static_cast<int>(p.size());

  int drop = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(p[i]) > std::abs(p[drop])) drop = i;

  Mat frame(n, n - 1);
  int col = 0;
  for (int i = 0; i < n; ++i) {
    if (i == drop) continue;
    Vec v = Vec::Zero(n);
    v[i] = 1.0;
    v -= v.dot(p) * p;
    for (int j = 0; j < col; ++j) v -= v.dot(frame.col(j)) * frame.col(j);
    frame.col(col++) = v / v.norm();
  }
  return TangentFrame{x, std::move(frame)};
}

SpherePoint geodesic(const SpherePoint& x, const Vec& v, double t) {
  const double speed = v.norm();
  if (speed == 0.0) return x;
  const double phase = t * speed;
  return SpherePoint(std::cos(phase) * x.coords() +
                     std::sin(phase) * (v / speed));
}

Vec transport_tangent(const SpherePoint& x, const Vec& v, double t,
                      const Vec& w) {
  const double speed = v.norm();
  if (speed == 0.0) return w;
  const Vec vhat = v / speed;
  const double c = w.dot(vhat);
  const double phase = t * speed;
  return w - c * vhat +
         c * (std::cos(phase) * vhat - std::sin(phase) * x.coords());
}

double sphere_volume(int m) {
  // 2 pi^{(m+1)/2} / Gamma((m+1)/2)
  const double half = 0.5 * (m + 1);
  return 2.0 * std::pow(M_PI, half) / std::tgamma(half);
}

}  // namespace jacobi
