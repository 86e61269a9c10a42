#pragma once

#include <jacobi/maps.hpp>
#include <jacobi/quadrature.hpp>
#include <jacobi/spectral.hpp>

namespace jacobi {

/// Tension field at x: minus the codifferential of du.  Vanishes exactly
/// where the map is harmonic.
Vec tension_field(const SphereMap& map, const SpherePoint& x,
                  const TangentFrame& frame, Method method,
                  const ToleranceProfile& prof);

/// Sup of |tension| over the grid; the harmonicity admission statistic.
double tension_sup(std::shared_ptr<const SphereMap> map,
                   const QuadratureGrid& grid, Method method,
                   const ToleranceProfile& prof);

/// Jacobi operator of the energy at a harmonic map,
/// J V = nabla* nabla V - sum_i R^N_{V, du(e_i)} du(e_i).
Vec jacobi_apply(const SphereMap& map, const PullbackSection& V,
                 const SpherePoint& x, const TangentFrame& frame,
                 Method method, const ToleranceProfile& prof);

/// The candidate eigensection X_l = du(grad l).  Carries exact derivative
/// evaluators exactly when the map does.
PullbackSection x_ell_field(std::shared_ptr<const SphereMap> map,
                            const LinearFunction& l);

struct EigenResidual {
  double residual = 0.0;    // relative L2 residual of J V - lambda V
  double eigenvalue = 0.0;  // the predicted eigenvalue
  double section_norm = 0.0;
  bool advisory = false;    // base object failed its criticality admission
  std::string note;
};

/// Relative L2 residual of J_u X_l + (m-2) X_l over the grid.  Throws
/// DegenerateSectionError when X_l vanishes on the grid (constant map).
EigenResidual eigen_residual_harmonic(std::shared_ptr<const SphereMap> map,
                                      const LinearFunction& l,
                                      const QuadratureGrid& grid, Method method,
                                      const ToleranceProfile& prof);

/// Gram matrix of {X_l} over the coordinate basis of linear functions and
/// its numerical rank: the multiplicity lower bound for the eigenvalue
/// -(m-2).  Rank m+1 for nonconstant catalog maps, 0 for constant maps.
GramAnalysis multiplicity_bound_harmonic(std::shared_ptr<const SphereMap> map,
                                         const QuadratureGrid& grid,
                                         const ToleranceProfile& prof);

/// sup |X_l| over the grid, relative to the sup of |du|; the detector
/// feeding the nonvanishing claim for nonconstant maps.
double zero_section_statistic(std::shared_ptr<const SphereMap> map,
                              const LinearFunction& l,
                              const QuadratureGrid& grid);

/// L2 residual of the harmonic-map Weitzenbock identity
/// Delta(du) + sum_a R^N_{du(.),du(e_a)} du(e_a) - du(Ric(.)) over the grid.
double harmonic_bochner_residual(std::shared_ptr<const SphereMap> map,
                                 const QuadratureGrid& grid, Method method,
                                 const ToleranceProfile& prof);

}  // namespace jacobi
