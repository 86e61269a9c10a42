#pragma once

#include <jacobi/forms.hpp>

#include <memory>
#include <string>

namespace jacobi {

/// Curvature tensor of the target manifold, as the evaluator
/// (u, X, Y, Z) -> R_{X,Y} Z at the target point u, with the sign fixed by
/// <R_{X,Y} Y, X> > 0 on the round sphere.  Catalog targets are round
/// spheres; embedded targets supply their own evaluator here.
struct TargetCurvature {
  bool round = true;
  std::function<Vec(const Vec& u, const Vec& X, const Vec& Y, const Vec& Z)> op;

  Vec apply(const Vec& u, const Vec& X, const Vec& Y, const Vec& Z) const;
  static TargetCurvature round_sphere();
};

/// A smooth map u: S^m -> S^n (or an isometrically embedded target) given by
/// closed-form evaluators.  `push` is the differential du(x)(X);
/// `push_derivative`, when present, is the exact (D_Z du)(X) of the pullback
/// connection and `push_second`, the exact (D^2_{W,Z} du)(X).
struct SphereMap {
  std::string name;
  int domain_dim = 0;
  int target_dim = 0;
  bool is_constant = false;
  bool claims_harmonic = false;

  std::function<Vec(const SpherePoint&)> value;
  std::function<Vec(const SpherePoint&, const Vec&)> push;
  std::function<Vec(const SpherePoint&, const Vec&, const Vec&)> push_derivative;
  std::function<Vec(const SpherePoint&, const Vec&, const Vec&, const Vec&)>
      push_second;
  TargetCurvature target_curvature = TargetCurvature::round_sphere();

  bool has_push_derivative() const { return static_cast<bool>(push_derivative); }
  bool has_push_second() const { return static_cast<bool>(push_second); }
};

/// The pullback bundle u^{-1}(T S^n): fibers are target tangent spaces along
/// the map, realized by the projector I - u u^T; the covariant derivative is
/// the tangential projection of the ambient derivative.
class PullbackBundle final : public VectorBundle {
 public:
  explicit PullbackBundle(std::shared_ptr<const SphereMap> map);

  int base_dim() const override { return map_->domain_dim; }
  int rank() const override { return map_->target_dim; }
  int ambient_dim() const override { return map_->target_dim + 1; }
  Mat fiber_projector(const SpherePoint& x) const override;
  Mat curvature(const SpherePoint& x, const Vec& X, const Vec& Y) const override;

  const SphereMap& map() const { return *map_; }

 private:
  std::shared_ptr<const SphereMap> map_;
};

/// Section of the pullback bundle, x -> V(x) in T_{u(x)} S^n, with optional
/// exact covariant derivatives.
struct PullbackSection {
  std::shared_ptr<const SphereMap> map;
  std::function<Vec(const SpherePoint&)> eval;
  std::function<Vec(const SpherePoint&, const Vec&)> exact_d1;
  std::function<Vec(const SpherePoint&, const Vec&, const Vec&)> exact_d2;

  bool has_analytic() const {
    return static_cast<bool>(exact_d1) && static_cast<bool>(exact_d2);
  }
};

/// du packaged as a 1-form valued in the pullback bundle.
BundleValuedForm differential_form(std::shared_ptr<const SphereMap> map);

/// A section packaged as a 0-form over the pullback bundle.
BundleValuedForm section_form(const PullbackSection& section);

/// Precomposition with an ambient rotation of the domain, u o rho.
std::shared_ptr<const SphereMap> precompose_rotation(
    std::shared_ptr<const SphereMap> map, const Mat& rho);

/// Catalog: constant maps, identities, equatorial embeddings, the Hopf map.
const std::vector<std::shared_ptr<const SphereMap>>& map_catalog();
std::shared_ptr<const SphereMap> find_map(const std::string& name);

}  // namespace jacobi
