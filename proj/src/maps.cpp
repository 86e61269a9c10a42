#include <jacobi/maps.hpp>

#include <cmath>

namespace jacobi {

Vec TargetCurvature::apply(const Vec& u, const Vec& X, const Vec& Y,
                           const Vec& Z) const {
  if (round) return Y.dot(Z) * X - X.dot(Z) * Y;
  if (!op) throw CapabilityError("embedded target without curvature evaluator");
  return op(u, X, Y, Z);
}

TargetCurvature TargetCurvature::round_sphere() { return TargetCurvature{}; }

PullbackBundle::PullbackBundle(std::shared_ptr<const SphereMap> map)
    : map_(std::move(map)) {}

Mat PullbackBundle::fiber_projector(const SpherePoint& x) const {
  const Vec u = map_->value(x);
  const int K = ambient_dim();
  return Mat::Identity(K, K) - u * u.transpose();
}

Mat PullbackBundle::curvature(const SpherePoint& x, const Vec& X,
                              const Vec& Y) const {
  const Vec dX = map_->push(x, X);
  const Vec dY = map_->push(x, Y);
  if (map_->target_curvature.round)
    return dX * dY.transpose() - dY * dX.transpose();
  // assemble the endomorphism column by column from the evaluator
  const Vec u = map_->value(x);
  const int K = ambient_dim();
  Mat R(K, K);
  for (int j = 0; j < K; ++j) {
    Vec ej = Vec::Zero(K);
    ej[j] = 1.0;
    R.col(j) = map_->target_curvature.apply(u, dX, dY, ej - ej.dot(u) * u);
  }
  return R;
}

BundleValuedForm differential_form(std::shared_ptr<const SphereMap> map) {
  BundleValuedForm du;
  du.degree = 1;
  du.kind = FiberKind::vector;
  du.bundle = std::make_shared<PullbackBundle>(map);
  du.eval = [map](const SpherePoint& x, std::span<const Vec> args) {
    return Mat(map->push(x, args[0]));
  };
  if (map->has_push_derivative()) {
    du.exact_d1 = [map](const SpherePoint& x, const Vec& dir,
                        std::span<const Vec> args) {
      return Mat(map->push_derivative(x, dir, args[0]));
    };
  }
  if (map->has_push_second()) {
    du.exact_d2 = [map](const SpherePoint& x, const Vec& outer,
                        const Vec& inner, std::span<const Vec> args) {
      return Mat(map->push_second(x, outer, inner, args[0]));
    };
  }
  return du;
}

BundleValuedForm section_form(const PullbackSection& section) {
  BundleValuedForm f;
  f.degree = 0;
  f.kind = FiberKind::vector;
  f.bundle = std::make_shared<PullbackBundle>(section.map);
  auto eval = section.eval;
  f.eval = [eval](const SpherePoint& x, std::span<const Vec>) {
    return Mat(eval(x));
  };
  if (section.exact_d1) {
    auto d1 = section.exact_d1;
    f.exact_d1 = [d1](const SpherePoint& x, const Vec& dir,
                      std::span<const Vec>) { return Mat(d1(x, dir)); };
  }
  if (section.exact_d2) {
    auto d2 = section.exact_d2;
    f.exact_d2 = [d2](const SpherePoint& x, const Vec& outer, const Vec& inner,
                      std::span<const Vec>) {
      return Mat(d2(x, outer, inner));
    };
  }
  return f;
}

std::shared_ptr<const SphereMap> precompose_rotation(
    std::shared_ptr<const SphereMap> map, const Mat& rho) {
  const int n = map->domain_dim + 1;
  if (rho.rows() != n || rho.cols() != n)
    throw std::invalid_argument("precompose_rotation: dimension mismatch");
  if ((rho * rho.transpose() - Mat::Identity(n, n)).norm() > 1e-10)
    throw std::invalid_argument("precompose_rotation: not orthogonal");

  auto rotated = std::make_shared<SphereMap>(*map);
  rotated->name = map->name + "@rotated";
  auto base = map;
  rotated->value = [base, rho](const SpherePoint& x) {
    return base->value(SpherePoint(rho * x.coords()));
  };
  rotated->push = [base, rho](const SpherePoint& x, const Vec& X) {
    return base->push(SpherePoint(rho * x.coords()), rho * X);
  };
  if (base->has_push_derivative()) {
    rotated->push_derivative = [base, rho](const SpherePoint& x, const Vec& Z,
                                           const Vec& X) {
      return base->push_derivative(SpherePoint(rho * x.coords()), rho * Z,
                                   rho * X);
    };
  }
  if (base->has_push_second()) {
    rotated->push_second = [base, rho](const SpherePoint& x, const Vec& W,
                                       const Vec& Z, const Vec& X) {
      return base->push_second(SpherePoint(rho * x.coords()), rho * W, rho * Z,
                               rho * X);
    };
  }
  return rotated;
}

namespace {

// Maps with vanishing second fundamental form (constant, identity,
// equatorial): du is parallel, so every derivative evaluator is closed form.
std::shared_ptr<const SphereMap> make_totally_geodesic(
    std::string name, int m, int n, bool constant,
    std::function<Vec(const SpherePoint&)> value,
    std::function<Vec(const SpherePoint&, const Vec&)> push) {
  auto map = std::make_shared<SphereMap>();
  map->name = std::move(name);
  map->domain_dim = m;
  map->target_dim = n;
  map->is_constant = constant;
  map->claims_harmonic = true;
  map->value = std::move(value);
  map->push = std::move(push);
  const int K = n + 1;
  map->push_derivative = [K](const SpherePoint&, const Vec&, const Vec&) {
    return Vec(Vec::Zero(K));
  };
  map->push_second = [K](const SpherePoint&, const Vec&, const Vec&,
                         const Vec&) { return Vec(Vec::Zero(K)); };
  return map;
}

std::shared_ptr<const SphereMap> make_identity(int m) {
  return make_totally_geodesic(
      "identity-s" + std::to_string(m), m, m, false,
      [](const SpherePoint& x) { return x.coords(); },
      [](const SpherePoint&, const Vec& X) { return X; });
}

std::shared_ptr<const SphereMap> make_equator(int m, int n) {
  auto embed = [n](const Vec& v) {
    Vec out = Vec::Zero(n + 1);
    out.head(v.size()) = v;
    return out;
  };
  return make_totally_geodesic(
      "equator-s" + std::to_string(m) + "-in-s" + std::to_string(n), m, n,
      false, [embed](const SpherePoint& x) { return embed(x.coords()); },
      [embed](const SpherePoint&, const Vec& X) { return embed(X); });
}

std::shared_ptr<const SphereMap> make_constant() {
  Vec north(3);
  north << 0.0, 0.0, 1.0;
  return make_totally_geodesic(
      "constant-s3-s2", 3, 2, true,
      [north](const SpherePoint&) { return north; },
      [](const SpherePoint&, const Vec&) { return Vec(Vec::Zero(3)); });
}

// Hopf fibration S^3 -> S^2: every component is a degree-2 harmonic
// polynomial, so the map is a harmonic eigenmap with |du|^2 = 8.
std::shared_ptr<const SphereMap> make_hopf() {
  auto map = std::make_shared<SphereMap>();
  map->name = "hopf";
  map->domain_dim = 3;
  map->target_dim = 2;
  map->claims_harmonic = true;
  map->value = [](const SpherePoint& p) {
    const Vec& x = p.coords();
    Vec u(3);
    u << 2.0 * (x[0] * x[2] + x[1] * x[3]), 2.0 * (x[1] * x[2] - x[0] * x[3]),
        x[0] * x[0] + x[1] * x[1] - x[2] * x[2] - x[3] * x[3];
    return u;
  };
  // the bilinear D^2 u is constant; D u(x) = D^2 u(x, .)
  auto second = [](const Vec& Z, const Vec& X) {
    Vec d(3);
    d << 2.0 * (Z[0] * X[2] + Z[2] * X[0] + Z[1] * X[3] + Z[3] * X[1]),
        2.0 * (Z[1] * X[2] + Z[2] * X[1] - Z[0] * X[3] - Z[3] * X[0]),
        2.0 * (Z[0] * X[0] + Z[1] * X[1] - Z[2] * X[2] - Z[3] * X[3]);
    return d;
  };
  map->push = [second](const SpherePoint& p, const Vec& X) {
    return second(p.coords(), X);
  };
  auto value = map->value;
  // (D_Z du)(X) = Pi_u D^2u(Z, X)
  map->push_derivative = [value, second](const SpherePoint& p, const Vec& Z,
                                         const Vec& X) {
    const Vec u = value(p);
    const Vec d2 = second(Z, X);
    return Vec(d2 - d2.dot(u) * u);
  };
  return map;
}

}  // namespace

const std::vector<std::shared_ptr<const SphereMap>>& map_catalog() {
  static const std::vector<std::shared_ptr<const SphereMap>> catalog = [] {
    std::vector<std::shared_ptr<const SphereMap>> maps;
    maps.push_back(make_constant());
    for (int m = 2; m <= 6; ++m) maps.push_back(make_identity(m));
    maps.push_back(make_hopf());
    maps.push_back(make_equator(2, 4));
    maps.push_back(make_equator(3, 5));
    return maps;
  }();
  return catalog;
}

std::shared_ptr<const SphereMap> find_map(const std::string& name) {
  for (const auto& map : map_catalog())
    if (map->name == name) return map;
  return nullptr;
}

}  // namespace jacobi
