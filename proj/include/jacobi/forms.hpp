#pragma once

#include <jacobi/bundle.hpp>

#include <functional>
#include <span>
#include <vector>

namespace jacobi {

/// How fiber values sit over the bundle: plain fiber vectors (columns), or
/// antisymmetric endomorphisms of the fiber (square matrices, transported by
/// conjugation, acted on by curvature through the commutator).
enum class FiberKind { vector, endomorphism };

/// Bundle-valued p-form over S^m, p in {0,1,2}.  Values are Mats: K x 1
/// columns for FiberKind::vector, K x K matrices for endomorphisms.
/// Evaluators must be pure; forms are shared freely across threads.
struct BundleValuedForm {
  int degree = 0;
  FiberKind kind = FiberKind::vector;
  std::shared_ptr<const VectorBundle> bundle;

  /// omega(x; X_1..X_p).  args.size() == degree.
  std::function<Mat(const SpherePoint&, std::span<const Vec>)> eval;

  /// Optional closed-form covariant derivative (D_dir omega)(args).
  std::function<Mat(const SpherePoint&, const Vec&, std::span<const Vec>)>
      exact_d1;

  /// Optional closed-form second covariant derivative
  /// (D^2_{outer,inner} omega)(args), parallel-extension convention.
  std::function<Mat(const SpherePoint&, const Vec&, const Vec&,
                    std::span<const Vec>)>
      exact_d2;

  bool has_exact_d1() const { return static_cast<bool>(exact_d1); }
  bool has_exact_d2() const { return static_cast<bool>(exact_d2); }

  Mat zero_value() const;
};

/// Sphere-specific constants entering the Weitzenbock curvature term:
/// Ric = (m-1) id on 1-forms and the (2m-4) multiple of the identity on
/// 2-forms.  Asserted on construction.
struct WeitzenbockConstants {
  int m;
  double ricci_factor;     // m - 1
  double two_form_factor;  // 2m - 4
  explicit WeitzenbockConstants(int dim);
};

/// Transport a fiber value from x to geodesic(x,v,t): P v for vectors,
/// P v P^T for endomorphisms.
Mat transport_value(const VectorBundle& bundle, FiberKind kind,
                    const SpherePoint& x, const Vec& v, double t,
                    const Mat& value);

/// Project an ambient value onto the fiber at x.
Mat project_value(const VectorBundle& bundle, FiberKind kind,
                  const SpherePoint& x, const Mat& value);

/// Curvature acting on a fiber value: R v for vectors, [R, v] for
/// endomorphisms (the adjoint action).
Mat curvature_action(const VectorBundle& bundle, FiberKind kind,
                     const SpherePoint& x, const Vec& X, const Vec& Y,
                     const Mat& value);

/// (D_dir omega)(args) at x.  The fd path walks the geodesic in direction
/// dir, carries the tangent arguments by projection (second-order accurate
/// against true transport), pulls the value back through the fiber
/// projector, and central-differences.  Throws CapabilityError if the
/// analytic path is requested without an exact evaluator.
Mat covariant_derivative(const BundleValuedForm& omega, const SpherePoint& x,
                         const Vec& dir, std::span<const Vec> args,
                         Method method, const ToleranceProfile& prof);

/// (D^2_{outer,inner} omega)(args): nested first derivatives with
/// projector-transported arguments, so no Christoffel bookkeeping is needed.
Mat second_covariant_derivative(const BundleValuedForm& omega,
                                const SpherePoint& x, const Vec& outer,
                                const Vec& inner, std::span<const Vec> args,
                                Method method, const ToleranceProfile& prof);

/// Trace Laplacian Delta omega = sum_j D^2_{e_j,e_j} omega (sign: the
/// negative of the rough Laplacian nabla* nabla).
Mat rough_laplacian(const BundleValuedForm& omega, const SpherePoint& x,
                    const TangentFrame& frame, std::span<const Vec> args,
                    Method method, const ToleranceProfile& prof);

/// Covariant exterior derivative, degree k -> k+1 for k in {0,1}.
/// The result carries a derived exact_d1 when omega has exact_d2.
BundleValuedForm exterior_d(const BundleValuedForm& omega, Method method,
                            const ToleranceProfile& prof);

/// Codifferential (d_D^* omega)(args) = -sum_s (D_{e_s} omega)(e_s, args).
/// Degree 0 input returns zero by convention.
Mat codifferential(const BundleValuedForm& omega, const SpherePoint& x,
                   const TangentFrame& frame, std::span<const Vec> args,
                   Method method, const ToleranceProfile& prof);

/// The curvature term S of the Weitzenbock identity on the round sphere,
/// expanded per degree: S = (m-1) omega + scriptR(omega) for 1-forms and
/// S = (2m-4) omega + scriptR(omega) for 2-forms, with scriptR the fiber
/// curvature acting through the frame sum.
Mat weitzenbock_term(const BundleValuedForm& omega, const SpherePoint& x,
                     const TangentFrame& frame, std::span<const Vec> args);

/// Pointwise residual of the Weitzenbock identity
/// (d_D d_D^* + d_D^* d_D) omega = -Delta omega + S, i.e. the norm of
/// Delta_{d_D} omega + Delta omega - S over the frame slots.
double bochner_residual(const BundleValuedForm& omega, const SpherePoint& x,
                        const TangentFrame& frame, Method method,
                        const ToleranceProfile& prof);

/// The curvature of a bundle packaged as an endomorphism-valued 2-form,
/// with an exact derivative evaluator when the bundle knows one.
BundleValuedForm curvature_form(std::shared_ptr<const VectorBundle> bundle);

/// Cyclic-sum residual of the differential Bianchi identity d_D R = 0,
/// maximized over frame triples at x.
double bianchi_residual(std::shared_ptr<const VectorBundle> bundle,
                        const SpherePoint& x, const TangentFrame& frame,
                        Method method, const ToleranceProfile& prof);

/// Frobenius norm of a value; the fiber norm used everywhere.
double value_norm(const Mat& value);

/// Pointwise p-form norm over an orthonormal frame (sum over strictly
/// increasing index tuples).
double form_norm(const BundleValuedForm& omega, const SpherePoint& x,
                 const TangentFrame& frame);

/// Pointwise inner product of two equal-degree forms over a frame.
double form_inner(const BundleValuedForm& a, const BundleValuedForm& b,
                  const SpherePoint& x, const TangentFrame& frame);

}  // namespace jacobi
