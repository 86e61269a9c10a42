#pragma once

#include <jacobi/sphere.hpp>

#include <memory>

namespace jacobi {

/// A Riemannian vector bundle over S^m with a metric connection, realized in
/// ambient coordinates: the fiber at x is the range of an orthogonal
/// projector in R^K, sections are projector-invariant vector fields, and the
/// covariant derivative is "differentiate in the ambient, project back".
/// Parallel transport along geodesics is exposed separately (exact closed
/// forms for catalog bundles, integrated otherwise) for cross-checks.
class VectorBundle {
 public:
  virtual ~VectorBundle() = default;

  virtual int base_dim() const = 0;     // m
  virtual int rank() const = 0;         // intrinsic fiber dimension
  virtual int ambient_dim() const = 0;  // K

  /// Symmetric idempotent K x K matrix whose range is the fiber at x.
  virtual Mat fiber_projector(const SpherePoint& x) const = 0;

  /// Curvature R(x)(X,Y) as a K x K antisymmetric endomorphism of the fiber.
  virtual Mat curvature(const SpherePoint& x, const Vec& X,
                        const Vec& Y) const = 0;

  /// Parallel transport along geodesic(x, v, .) from time 0 to time t,
  /// as a K x K matrix restricting to an isometry fiber_x -> fiber_gamma(t).
  virtual Mat transport(const SpherePoint& x, const Vec& v, double t) const;

  virtual bool has_exact_transport() const { return false; }
  virtual bool is_flat() const { return false; }

  /// Closed-form covariant derivative of the curvature 2-form,
  /// (D_Z R)(X,Y), when the bundle knows it.  Default: unavailable.
  virtual bool has_curvature_derivative() const { return false; }
  virtual Mat curvature_derivative(const SpherePoint& x, const Vec& Z,
                                   const Vec& X, const Vec& Y) const;
};

/// Flat trivial bundle R^k over S^m.
class TrivialBundle final : public VectorBundle {
 public:
  TrivialBundle(int m, int k) : m_(m), k_(k) {}
  int base_dim() const override { return m_; }
  int rank() const override { return k_; }
  int ambient_dim() const override { return k_; }
  Mat fiber_projector(const SpherePoint&) const override {
    return Mat::Identity(k_, k_);
  }
  Mat curvature(const SpherePoint&, const Vec&, const Vec&) const override {
    return Mat::Zero(k_, k_);
  }
  Mat transport(const SpherePoint&, const Vec&, double) const override {
    return Mat::Identity(k_, k_);
  }
  bool has_exact_transport() const override { return true; }
  bool is_flat() const override { return true; }
  bool has_curvature_derivative() const override { return true; }
  Mat curvature_derivative(const SpherePoint&, const Vec&, const Vec&,
                           const Vec&) const override {
    return Mat::Zero(k_, k_);
  }

 private:
  int m_, k_;
};

/// TS^m with the Levi-Civita connection, the nonflat workhorse.
/// Curvature is the constant-curvature form R_{X,Y} = X Y^T - Y X^T.
class SphereTangentBundle final : public VectorBundle {
 public:
  explicit SphereTangentBundle(int m) : m_(m) {}
  int base_dim() const override { return m_; }
  int rank() const override { return m_; }
  int ambient_dim() const override { return m_ + 1; }
  Mat fiber_projector(const SpherePoint& x) const override;
  Mat curvature(const SpherePoint&, const Vec& X, const Vec& Y) const override;
  Mat transport(const SpherePoint& x, const Vec& v, double t) const override;
  bool has_exact_transport() const override { return true; }
  // constant-curvature: R is parallel
  bool has_curvature_derivative() const override { return true; }
  Mat curvature_derivative(const SpherePoint&, const Vec&, const Vec&,
                           const Vec&) const override {
    return Mat::Zero(m_ + 1, m_ + 1);
  }

 private:
  int m_;
};

/// Rank-2 bundle over S^m with connection d + sigma (x) J0, where J0 is the
/// standard rotation generator and sigma = l1 dl2.  Abelian, so transport is
/// a closed-form rotation through the line integral of sigma; curvature is
/// dl1 wedge dl2 (x) J0.  Not Yang-Mills: the negative control.
class AbelianCurvedBundle final : public VectorBundle {
 public:
  AbelianCurvedBundle(int m, LinearFunction l1, LinearFunction l2);
  int base_dim() const override { return m_; }
  int rank() const override { return 2; }
  int ambient_dim() const override { return 2; }
  Mat fiber_projector(const SpherePoint&) const override {
    return Mat::Identity(2, 2);
  }
  Mat curvature(const SpherePoint& x, const Vec& X, const Vec& Y) const override;
  Mat transport(const SpherePoint& x, const Vec& v, double t) const override;
  bool has_exact_transport() const override { return true; }
  bool has_curvature_derivative() const override { return true; }
  Mat curvature_derivative(const SpherePoint& x, const Vec& Z, const Vec& X,
                           const Vec& Y) const override;

  /// Connection 1-form sigma(x)(X), the coefficient of J0.
  double sigma(const SpherePoint& x, const Vec& X) const;

 private:
  int m_;
  LinearFunction l1_, l2_;
};

}  // namespace jacobi
