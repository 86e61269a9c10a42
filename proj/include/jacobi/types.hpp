#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace jacobi {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Which differentiation path an operator uses: closed-form derivative
/// evaluators attached to the object, or central differences along geodesics.
enum class Method { analytic, fd };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

/// Requested an analytic evaluator that the object does not carry, or an
/// operation a catalog entry does not support.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A candidate eigensection vanished identically; per the degeneracy
/// propositions this signals a constant map / flat connection.
class DegenerateSectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Variational base object fails the criticality admission threshold.
class NonCriticalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every threshold and step size used by the verification operators.
/// A named preset resolves all of them; nothing is scattered in call sites.
struct ToleranceProfile {
  std::string name = "default";

  // central-difference step sizes
  double fd_step_first = 1e-4;   // first covariant derivatives
  double fd_step_second = 1e-3;  // outer step of nested second derivatives

  // residual thresholds per differentiation path
  double analytic_identity = 1e-12;  // pointwise algebraic identities
  double analytic_residual = 1e-8;   // L2 residuals, closed-form path
  double fd_residual = 5e-4;         // L2 / sup residuals, fd path
  double fd_vs_analytic = 5e-6;      // relative gap between the two paths

  // Weitzenbock / integration-by-parts checks
  double bochner_residual = 1e-3;
  double adjointness_rel = 1e-3;

  // admission thresholds for "is the base object critical"
  double harmonic_admission = 1e-3;    // sup |tension|
  double yang_mills_admission = 1e-3;  // sup |d* R|
  double minimal_admission = 1e-3;     // sup |H|

  // spectral utilities
  double gram_rank_rel = 1e-6;        // singular values kept above eps*sigma_max
  double totally_geodesic_eps = 1e-6; // sup |B| below this counts as B == 0
  double zero_section_rel = 1e-6;     // sup |X_l| relative to the scale of du

  // variational oracle
  double second_variation_rel = 1e-2;
  double first_variation_rel = 1e-4;
  double first_variation_abs = 1e-6;
  double eigen_estimate_rel = 0.02;

  /// Residual threshold matching the differentiation path.
  double residual_tol(Method m) const {
    return m == Method::analytic ? analytic_residual : fd_residual;
  }

  /// Known presets: "default" (the thresholds above) and "coarse"
  /// (fd thresholds relaxed 10x, for quick low-level runs).
  static ToleranceProfile preset(const std::string& name);
};

}  // namespace jacobi
