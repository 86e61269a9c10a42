#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <jacobi/quadrature.hpp>
#include <jacobi/sphere.hpp>

#include <random>

using namespace jacobi;

namespace {

std::mt19937_64 rng(20260810ull);

Vec random_vec(int n, double scale = 1.0) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = scale * gauss(rng);
  return v;
}

SpherePoint random_point(int m) { return SpherePoint(random_vec(m + 1)); }

Vec random_tangent(const SpherePoint& x) {
  Vec v = project_tangent(x, random_vec(x.dim() + 1));
  return v / v.norm();
}

Vec unit(int n, int i) {
  Vec v = Vec::Zero(n);
  v[i] = 1.0;
  return v;
}

}  // namespace

TEST_CASE("sphere points renormalize and reject degenerate input") {
  Vec v(4);
  v << 2.0, 0.0, 0.0, 0.0;
  SpherePoint x(v);
  CHECK(x.dim() == 3);
  CHECK(x.coords()[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(x.coords().norm() - 1.0) < 1e-12);

  CHECK_THROWS_AS(SpherePoint(Vec::Zero(4)), std::invalid_argument);
  CHECK_THROWS_AS(SpherePoint(Vec::Ones(1)), std::invalid_argument);
}

TEST_CASE("gradient of a linear function") {
  SUBCASE("vanishes at the maximum point") {
    LinearFunction l{unit(4, 0)};
    SpherePoint x(unit(4, 0));
    CHECK(grad_linear(l, x).norm() < 1e-14);
  }
  SUBCASE("equals the coefficient vector on the zero set") {
    LinearFunction l{unit(4, 0)};
    SpherePoint x(unit(4, 1));
    CHECK((grad_linear(l, x) - unit(4, 0)).norm() < 1e-14);
  }
  SUBCASE("direct arithmetic") {
    Vec a(4);
    a << 1.0, 1.0, 0.0, 0.0;
    a /= std::sqrt(2.0);
    LinearFunction l{a};
    SpherePoint x(unit(4, 0));
    Vec expected(4);
    expected << 0.0, 1.0 / std::sqrt(2.0), 0.0, 0.0;
    CHECK((grad_linear(l, x) - expected).norm() < 1e-14);
  }
  SUBCASE("always tangent") {
    for (int trial = 0; trial < 50; ++trial) {
      const int m = 1 + static_cast<int>(rng() % 6);
      const SpherePoint x = random_point(m);
      const LinearFunction l{random_vec(m + 1)};
      CHECK(std::abs(grad_linear(l, x).dot(x.coords())) <= 1e-12);
    }
  }
}

TEST_CASE("hessian of a linear function") {
  SUBCASE("zero on the zero set of l") {
    LinearFunction l{unit(4, 0)};
    SpherePoint x(unit(4, 1));
    const Vec X = random_tangent(x);
    const Vec Y = random_tangent(x);
    CHECK(std::abs(hessian_linear(l, x, X, Y)) < 1e-14);
  }
  SUBCASE("unit tangent at the maximum gives -1") {
    LinearFunction l{unit(4, 0)};
    SpherePoint x(unit(4, 0));
    const Vec X = unit(4, 1);
    CHECK(hessian_linear(l, x, X, X) == doctest::Approx(-1.0).epsilon(1e-14));
  }
  SUBCASE("closed form is the algebraic identity -l<X,Y>") {
    for (int trial = 0; trial < 100; ++trial) {
      const int m = 1 + static_cast<int>(rng() % 6);
      const SpherePoint x = random_point(m);
      const LinearFunction l{random_vec(m + 1)};
      const Vec X = random_tangent(x);
      const Vec Y = random_tangent(x);
      CHECK(std::abs(hessian_linear(l, x, X, Y) + l(x) * X.dot(Y)) <= 1e-14);
    }
  }
  SUBCASE("finite differences agree with the closed form") {
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const int m = 1 + static_cast<int>(rng() % 6);
      const SpherePoint x = random_point(m);
      const LinearFunction l{random_vec(m + 1)};
      const Vec X = random_tangent(x);
      const Vec Y = random_tangent(x);
      const double exact = hessian_linear(l, x, X, Y);
      const double fd = hessian_linear_fd(l, x, X, Y, 1e-3);
      worst = std::max(worst, std::abs(exact - fd));
    }
    CHECK(worst <= 5e-6);
  }
  SUBCASE("rejects non-tangent input") {
    LinearFunction l{unit(4, 0)};
    SpherePoint x(unit(4, 0));
    CHECK_THROWS_AS(hessian_linear(l, x, unit(4, 0), unit(4, 1)),
                    std::invalid_argument);
  }
}

TEST_CASE("deterministic tangent frames") {
  SUBCASE("north pole gets the first m coordinate vectors") {
    const int m = 4;
    SpherePoint x(unit(m + 1, m));
    const TangentFrame f = tangent_frame(x);
    for (int j = 0; j < m; ++j) CHECK((f.e(j) - unit(m + 1, j)).norm() < 1e-14);
  }
  SUBCASE("frame Gram matrix is the identity") {
    for (int trial = 0; trial < 50; ++trial) {
      const int m = 1 + static_cast<int>(rng() % 6);
      const SpherePoint x = random_point(m);
      const TangentFrame f = tangent_frame(x);
      const Mat G = f.vectors.transpose() * f.vectors;
      CHECK((G - Mat::Identity(m, m)).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK((f.vectors.transpose() * x.coords()).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
  SUBCASE("repeated construction is bitwise identical") {
    const SpherePoint x = random_point(5);
    const TangentFrame a = tangent_frame(x);
    const TangentFrame b = tangent_frame(x);
    CHECK((a.vectors.array() == b.vectors.array()).all());
  }
}

TEST_CASE("geodesics") {
  const SpherePoint x = random_point(3);
  SUBCASE("zero velocity stays put") {
    CHECK((geodesic(x, Vec::Zero(4), 2.7).coords() - x.coords()).norm() == 0.0);
  }
  SUBCASE("unit speed quarter turn lands on the direction") {
    const Vec v = random_tangent(x);
    CHECK((geodesic(x, v, M_PI / 2).coords() - v).norm() < 1e-12);
  }
  SUBCASE("stays on the sphere") {
    for (int trial = 0; trial < 50; ++trial) {
      const SpherePoint y = random_point(4);
      const Vec v = random_vec(5.0);
      const Vec w = project_tangent(y, random_vec(5));
      const double t = std::uniform_real_distribution<double>(-3, 3)(rng);
      CHECK(std::abs(geodesic(y, w, t).coords().norm() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("parallel transport along geodesics") {
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 4);
    const SpherePoint x = random_point(m);
    const Vec v = random_tangent(x);
    const Vec w = project_tangent(x, random_vec(m + 1));
    const double t = 0.3 + 0.1 * trial / 25.0;
    const SpherePoint y = geodesic(x, v, t);
    const Vec tw = transport_tangent(x, v, t, w);
    // isometric and tangent at the endpoint
    CHECK(std::abs(tw.norm() - w.norm()) < 1e-12);
    CHECK(std::abs(tw.dot(y.coords())) < 1e-12);
    // the velocity transports to the velocity
    const Vec tv = transport_tangent(x, v, t, v);
    const Vec gdot = -std::sin(t) * x.coords() + std::cos(t) * v;
    CHECK((tv - gdot).norm() < 1e-12);
  }
}

TEST_CASE("gauss-jacobi rules") {
  SUBCASE("legendre special case integrates polynomials") {
    const GaussJacobiRule rule = gauss_jacobi(4, 0.0);
    double mass = 0.0, second = 0.0, sixth = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      mass += rule.weights[i];
      second += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
      sixth += rule.weights[i] * std::pow(rule.nodes[i], 6);
    }
    CHECK(mass == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(second == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(sixth == doctest::Approx(2.0 / 7.0).epsilon(1e-13));
  }
  SUBCASE("gegenbauer weight mass matches the sphere volume ratio") {
    // int (1-t^2)^{1/2} dt = pi/2 = vol(S^3)/vol(S^2) * ... direct value
    const GaussJacobiRule rule = gauss_jacobi(6, 0.5);
    double mass = 0.0;
    for (double w : rule.weights) mass += w;
    CHECK(mass == doctest::Approx(M_PI / 2.0).epsilon(1e-13));
  }
}

TEST_CASE("sphere quadrature invariants") {
  SUBCASE("weights sum to the sphere volume") {
    CHECK(QuadratureGrid::build(2, 1).volume() ==
          doctest::Approx(4.0 * M_PI).epsilon(1e-8));
    for (int m = 1; m <= 6; ++m)
      for (int level = 1; level <= 2; ++level)
        CHECK(QuadratureGrid::build(m, level).volume() ==
              doctest::Approx(sphere_volume(m)).epsilon(1e-12));
  }
  SUBCASE("linear functions integrate to zero") {
    for (int m = 1; m <= 5; ++m) {
      const QuadratureGrid grid = QuadratureGrid::build(m, 2);
      for (const LinearFunction& l : LinearFunction::coordinate_basis(m)) {
        const double integral = grid.integrate([&](const SpherePoint& x) {
          return l(x);
        });
        CHECK(std::abs(integral) <= 1e-8 * sphere_volume(m));
      }
    }
  }
  SUBCASE("squares of linear functions hit vol/(m+1)") {
    for (int m = 1; m <= 6; ++m) {
      const QuadratureGrid grid = QuadratureGrid::build(m, 2);
      const LinearFunction l{unit(m + 1, 1)};
      const double integral = grid.integrate([&](const SpherePoint& x) {
        const double v = l(x);
        return v * v;
      });
      CHECK(integral ==
            doctest::Approx(sphere_volume(m) / (m + 1)).epsilon(1e-6));
    }
  }
  SUBCASE("degree-four exactness spot check on the 2-sphere") {
    const QuadratureGrid grid = QuadratureGrid::build(2, 2);
    const double integral = grid.integrate([](const SpherePoint& x) {
      return std::pow(x.coords()[0], 4);
    });
    CHECK(integral == doctest::Approx(4.0 * M_PI / 5.0).epsilon(1e-12));
  }
  SUBCASE("rejects unsupported dimensions and levels") {
    CHECK_THROWS_AS(QuadratureGrid::build(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(QuadratureGrid::build(9, 1), std::invalid_argument);
    CHECK_THROWS_AS(QuadratureGrid::build(3, 0), std::invalid_argument);
  }
}

TEST_CASE("tolerance presets") {
  const ToleranceProfile def = ToleranceProfile::preset("default");
  CHECK(def.fd_residual == doctest::Approx(5e-4));
  const ToleranceProfile coarse = ToleranceProfile::preset("coarse");
  CHECK(coarse.fd_residual == doctest::Approx(5e-3));
  CHECK_THROWS_AS(ToleranceProfile::preset("nope"), std::invalid_argument);
}
