#pragma once

#include <jacobi/forms.hpp>

#include <random>

namespace jacobi::testing {

inline Vec random_vec(std::mt19937_64& rng, int n, double scale = 1.0) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = scale * gauss(rng);
  return v;
}

inline SpherePoint random_point(std::mt19937_64& rng, int m) {
  return SpherePoint(random_vec(rng, m + 1));
}

inline Vec random_unit_tangent(std::mt19937_64& rng, const SpherePoint& x) {
  Vec v = project_tangent(x, random_vec(rng, x.dim() + 1));
  return v / v.norm();
}

inline Mat random_rotation(std::mt19937_64& rng, int n) {
  Mat A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      A(i, j) = std::normal_distribution<double>(0.0, 1.0)(rng);
  Eigen::HouseholderQR<Mat> qr(A);
  Mat Q = qr.householderQ();
  if (Q.determinant() < 0) Q.col(0) *= -1.0;
  return Q;
}

inline Mat random_antisymmetric(std::mt19937_64& rng, int k) {
  Mat A = Mat::Zero(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const double v = std::normal_distribution<double>(0.0, 1.0)(rng);
      A(i, j) = v;
      A(j, i) = -v;
    }
  return A;
}

/// Smooth random 1-form valued in antisymmetric endomorphisms of the given
/// bundle: sums of l_k(x) <c_k, X> Pi A_k Pi terms.
inline BundleValuedForm random_endo_one_form(
    std::mt19937_64& rng, std::shared_ptr<const VectorBundle> bundle,
    int terms = 3) {
  const int m = bundle->base_dim();
  const int K = bundle->ambient_dim();
  struct Term {
    LinearFunction l;
    Vec c;
    Mat A;
  };
  auto data = std::make_shared<std::vector<Term>>();
  for (int t = 0; t < terms; ++t)
    data->push_back(Term{LinearFunction(random_vec(rng, m + 1)),
                         random_vec(rng, m + 1), random_antisymmetric(rng, K)});

  BundleValuedForm f;
  f.degree = 1;
  f.kind = FiberKind::endomorphism;
  f.bundle = bundle;
  f.eval = [bundle, data](const SpherePoint& x, std::span<const Vec> args) {
    const Mat Pi = bundle->fiber_projector(x);
    Mat acc = Mat::Zero(Pi.rows(), Pi.cols());
    for (const auto& term : *data)
      acc += term.l(x) * term.c.dot(args[0]) * (Pi * term.A * Pi);
    return acc;
  };
  return f;
}

/// Smooth random 2-form valued in antisymmetric endomorphisms:
/// l_k(x) (<c_k,X><d_k,Y> - <c_k,Y><d_k,X>) Pi A_k Pi.
inline BundleValuedForm random_endo_two_form(
    std::mt19937_64& rng, std::shared_ptr<const VectorBundle> bundle,
    int terms = 3) {
  const int m = bundle->base_dim();
  const int K = bundle->ambient_dim();
  struct Term {
    LinearFunction l;
    Vec c, d;
    Mat A;
  };
  auto data = std::make_shared<std::vector<Term>>();
  for (int t = 0; t < terms; ++t)
    data->push_back(Term{LinearFunction(random_vec(rng, m + 1)),
                         random_vec(rng, m + 1), random_vec(rng, m + 1),
                         random_antisymmetric(rng, K)});

  BundleValuedForm f;
  f.degree = 2;
  f.kind = FiberKind::endomorphism;
  f.bundle = bundle;
  f.eval = [bundle, data](const SpherePoint& x, std::span<const Vec> args) {
    const Mat Pi = bundle->fiber_projector(x);
    Mat acc = Mat::Zero(Pi.rows(), Pi.cols());
    for (const auto& term : *data) {
      const double w = term.c.dot(args[0]) * term.d.dot(args[1]) -
                       term.c.dot(args[1]) * term.d.dot(args[0]);
      acc += term.l(x) * w * (Pi * term.A * Pi);
    }
    return acc;
  };
  return f;
}

/// Smooth random vector-valued section (0-form) of the bundle: the
/// projection of a fixed random linear ambient field.
inline BundleValuedForm random_section(std::mt19937_64& rng,
                                       std::shared_ptr<const VectorBundle> bundle) {
  const int K = bundle->ambient_dim();
  const int m = bundle->base_dim();
  Mat W(K, m + 1);
  for (int i = 0; i < K; ++i)
    for (int j = 0; j <= m; ++j)
      W(i, j) = std::normal_distribution<double>(0.0, 1.0)(rng);

  BundleValuedForm f;
  f.degree = 0;
  f.kind = FiberKind::vector;
  f.bundle = bundle;
  f.eval = [bundle, W](const SpherePoint& x, std::span<const Vec>) {
    return Mat(bundle->fiber_projector(x) * (W * x.coords()));
  };
  return f;
}

}  // namespace jacobi::testing
