#include <jacobi/harmonic.hpp>

#include <cmath>

namespace jacobi {

Vec tension_field(const SphereMap& map, const SpherePoint& x,
                  const TangentFrame& frame, Method method,
                  const ToleranceProfile& prof) {
  const BundleValuedForm du = differential_form(std::make_shared<SphereMap>(map));
  return -codifferential(du, x, frame, {}, method, prof);
}

double tension_sup(std::shared_ptr<const SphereMap> map,
                   const QuadratureGrid& grid, Method method,
                   const ToleranceProfile& prof) {
  const BundleValuedForm du = differential_form(map);
  double worst = 0.0;
  for (const auto& node : grid.nodes()) {
    const TangentFrame frame = tangent_frame(node.point);
    const Vec t = -codifferential(du, node.point, frame, {}, method, prof);
    worst = std::max(worst, t.norm());
  }
  return worst;
}

Vec jacobi_apply(const SphereMap& map, const PullbackSection& V,
                 const SpherePoint& x, const TangentFrame& frame,
                 Method method, const ToleranceProfile& prof) {
  const BundleValuedForm Vf = section_form(V);
  const Vec laplacian = rough_laplacian(Vf, x, frame, {}, method, prof);
  const Vec u = map.value(x);
  const Vec v = V.eval(x);
  Vec curv = Vec::Zero(map.target_dim + 1);
  for (int i = 0; i < frame.size(); ++i) {
    const Vec dui = map.push(x, frame.e(i));
    curv += map.target_curvature.apply(u, v, dui, dui);
  }
  // nabla* nabla = -Delta
  return -laplacian - curv;
}

PullbackSection x_ell_field(std::shared_ptr<const SphereMap> map,
                            const LinearFunction& l) {
  if (l.ambient_dim() != map->domain_dim + 1)
    throw std::invalid_argument(
        "x_ell_field: linear function lives on the wrong sphere");
  PullbackSection s;
  s.map = map;
  s.eval = [map, l](const SpherePoint& x) {
    return map->push(x, grad_linear(l, x));
  };
  // When du is parallel (constant, identity, equatorial maps) the
  // derivatives close up: nabla_Z X_l = -l du(Z) and
  // nabla^2_{W,Z} X_l = -<grad l, W> du(Z).
  if (map->has_push_derivative() && map->has_push_second()) {
    Vec probe = Vec::Zero(map->domain_dim + 1);
    probe[0] = 1.0;
    const SpherePoint x0(probe);
    const TangentFrame f0 = tangent_frame(x0);
    if (map->push_derivative(x0, f0.e(0), f0.e(0)).norm() == 0.0) {
      s.exact_d1 = [map, l](const SpherePoint& x, const Vec& Z) {
        return Vec(-l(x) * map->push(x, Z));
      };
      s.exact_d2 = [map, l](const SpherePoint& x, const Vec& W, const Vec& Z) {
        return Vec(-grad_linear(l, x).dot(W) * map->push(x, Z));
      };
    }
  }
  return s;
}

EigenResidual eigen_residual_harmonic(std::shared_ptr<const SphereMap> map,
                                      const LinearFunction& l,
                                      const QuadratureGrid& grid, Method method,
                                      const ToleranceProfile& prof) {
  const int m = map->domain_dim;
  EigenResidual out;
  out.eigenvalue = -(m - 2.0);

  const PullbackSection X = x_ell_field(map, l);
  const BundleValuedForm du = differential_form(map);
  double num = 0.0, den = 0.0, tension_worst = 0.0;
  const std::size_t stride = std::max<std::size_t>(1, grid.nodes().size() / 32);

  std::size_t index = 0;
  for (const auto& node : grid.nodes()) {
    const TangentFrame frame = tangent_frame(node.point);
    const Vec v = X.eval(node.point);
    den += node.weight * v.squaredNorm();
    const Vec jv = jacobi_apply(*map, X, node.point, frame, method, prof);
    num += node.weight * (jv - out.eigenvalue * v).squaredNorm();
    if (index++ % stride == 0) {
      const Vec t = -codifferential(du, node.point, frame, {}, method, prof);
      tension_worst = std::max(tension_worst, t.norm());
    }
  }

  out.section_norm = std::sqrt(den);
  if (out.section_norm <= 1e-9 * std::sqrt(grid.volume()))
    throw DegenerateSectionError(
        "X_l vanishes on the grid: the map is constant");

  out.residual = std::sqrt(num) / out.section_norm;
  if (tension_worst > prof.harmonic_admission) {
    out.advisory = true;
    out.note = "base map failed the harmonicity admission (sup tension " +
               std::to_string(tension_worst) + ")";
  }
  return out;
}

GramAnalysis multiplicity_bound_harmonic(std::shared_ptr<const SphereMap> map,
                                         const QuadratureGrid& grid,
                                         const ToleranceProfile& prof) {
  const int m = map->domain_dim;
  const auto basis = LinearFunction::coordinate_basis(m);
  std::vector<PullbackSection> sections;
  sections.reserve(basis.size());
  for (const auto& l : basis) sections.push_back(x_ell_field(map, l));

  Mat gram = Mat::Zero(m + 1, m + 1);
  std::vector<Vec> values(m + 1);
  for (const auto& node : grid.nodes()) {
    for (int i = 0; i <= m; ++i) values[i] = sections[i].eval(node.point);
    for (int i = 0; i <= m; ++i)
      for (int j = i; j <= m; ++j) {
        const double v = node.weight * values[i].dot(values[j]);
        gram(i, j) += v;
        if (j != i) gram(j, i) += v;
      }
  }
  return analyze_gram(std::move(gram), prof.gram_rank_rel);
}

double zero_section_statistic(std::shared_ptr<const SphereMap> map,
                              const LinearFunction& l,
                              const QuadratureGrid& grid) {
  const PullbackSection X = x_ell_field(map, l);
  double sup_x = 0.0, sup_du = 0.0;
  for (const auto& node : grid.nodes()) {
    sup_x = std::max(sup_x, X.eval(node.point).norm());
    const TangentFrame frame = tangent_frame(node.point);
    double du2 = 0.0;
    for (int i = 0; i < frame.size(); ++i)
      du2 += map->push(node.point, frame.e(i)).squaredNorm();
    sup_du = std::max(sup_du, std::sqrt(du2));
  }
  return sup_du == 0.0 ? 0.0 : sup_x / sup_du;
}

double harmonic_bochner_residual(std::shared_ptr<const SphereMap> map,
                                 const QuadratureGrid& grid, Method method,
                                 const ToleranceProfile& prof) {
  const BundleValuedForm du = differential_form(map);
  const int m = map->domain_dim;
  const double ricci = m - 1.0;

  double num = 0.0, den = 0.0;
  std::vector<Vec> args(1);
  for (const auto& node : grid.nodes()) {
    const TangentFrame frame = tangent_frame(node.point);
    const Vec u = map->value(node.point);
    for (int i = 0; i < frame.size(); ++i) {
      const Vec X = frame.e(i);
      args[0] = X;
      const Vec lap = rough_laplacian(du, node.point, frame, args, method, prof);
      const Vec duX = map->push(node.point, X);
      Vec curv = Vec::Zero(map->target_dim + 1);
      for (int a = 0; a < frame.size(); ++a) {
        const Vec dua = map->push(node.point, frame.e(a));
        curv += map->target_curvature.apply(u, duX, dua, dua);
      }
      const Vec residual = lap + curv - ricci * duX;
      num += node.weight * residual.squaredNorm();
      den += node.weight * duX.squaredNorm();
    }
  }
  return den == 0.0 ? 0.0 : std::sqrt(num / den);
}

}  // namespace jacobi
