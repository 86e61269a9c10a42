#pragma once
#include <vector>

#include <jacobi/types.hpp>

namespace jacobi {

/// A point of the unit sphere S^m, stored as a unit vector in R^{m+1}.
/// Renormalized on construction; rejects near-zero input.
class SpherePoint {
 public:
  explicit SpherePoint(Vec coords);

  int dim() const { return static_cast<int>(x_.size()) - 1; }  // m
  const Vec& coords() const { return x_; }

 private:
  Vec x_;
};

/// The restriction of l(x) = <a, x> to the sphere.  Linear functions span
/// the first nontrivial eigenspace of the Laplacian and generate every
/// candidate eigensection in this project.
class LinearFunction {
 public:
  explicit LinearFunction(Vec coefficients) : a_(std::move(coefficients)) {}

  const Vec& coefficients() const { return a_; }
  int ambient_dim() const { return static_cast<int>(a_.size()); }

  double operator()(const SpherePoint& x) const { return a_.dot(x.coords()); }

  /// The m+1 coordinate functions, the basis used for multiplicity bounds.
  static std::vector<LinearFunction> coordinate_basis(int m);

 private:
  Vec a_;
};

/// Orthonormal basis of the tangent space at a point, columns of `vectors`.
struct TangentFrame {
  SpherePoint base;
  Mat vectors;  // (m+1) x m

  int size() const { return static_cast<int>(vectors.cols()); }
  Vec e(int j) const { return vectors.col(j); }
};

/// Tangential projection w - <w,x> x.
Vec project_tangent(const SpherePoint& x, const Vec& w);

/// Intrinsic gradient of a linear function: a - l(x) x.  Tangent at x.
Vec grad_linear(const LinearFunction& l, const SpherePoint& x);

/// Hessian of a linear function in the sphere metric, closed form
/// -l(x) <X,Y>.  X and Y must be tangent at x (checked to 1e-8).
double hessian_linear(const LinearFunction& l, const SpherePoint& x,
                      const Vec& X, const Vec& Y);

/// Companion finite-difference Hessian: geodesic second differences plus
/// polarization.  Independent of the closed form above.
double hessian_linear_fd(const LinearFunction& l, const SpherePoint& x,
                         const Vec& X, const Vec& Y, double h);

/// Deterministic orthonormal frame at x: drop the coordinate axis with the
/// largest |component| of x, Gram-Schmidt the remaining coordinate vectors
/// in ascending index order.
TangentFrame tangent_frame(const SpherePoint& x);

/// Unit-speed-in-|v| geodesic: cos(t|v|) x + sin(t|v|) v/|v|; x when v = 0.
SpherePoint geodesic(const SpherePoint& x, const Vec& v, double t);

/// Levi-Civita parallel transport of tangent vector w along geodesic(x,v,.)
/// from time 0 to time t.  Closed form: the (x,v)-plane rotates, the
/// orthogonal complement is fixed.
Vec transport_tangent(const SpherePoint& x, const Vec& v, double t,
                      const Vec& w);

/// Volume of the unit m-sphere.
double sphere_volume(int m);

}  // namespace jacobi
