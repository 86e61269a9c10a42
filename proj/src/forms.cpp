#include <jacobi/forms.hpp>

#include <cmath>

namespace jacobi {

Mat BundleValuedForm::zero_value() const {
  const int K = bundle->ambient_dim();
  return kind == FiberKind::vector ? Mat(Mat::Zero(K, 1))
                                   : Mat(Mat::Zero(K, K));
}

WeitzenbockConstants::WeitzenbockConstants(int dim)
    : m(dim), ricci_factor(dim - 1.0), two_form_factor(2.0 * dim - 4.0) {
  if (ricci_factor != m - 1 || two_form_factor != 2 * m - 4)
    throw std::logic_error("WeitzenbockConstants: inconsistent factors");
}

Mat transport_value(const VectorBundle& bundle, FiberKind kind,
                    const SpherePoint& x, const Vec& v, double t,
                    const Mat& value) {
  const Mat P = bundle.transport(x, v, t);
  return kind == FiberKind::vector ? Mat(P * value)
                                   : Mat(P * value * P.transpose());
}

Mat project_value(const VectorBundle& bundle, FiberKind kind,
                  const SpherePoint& x, const Mat& value) {
  const Mat Pi = bundle.fiber_projector(x);
  return kind == FiberKind::vector ? Mat(Pi * value) : Mat(Pi * value * Pi);
}

Mat curvature_action(const VectorBundle& bundle, FiberKind kind,
                     const SpherePoint& x, const Vec& X, const Vec& Y,
                     const Mat& value) {
  const Mat R = bundle.curvature(x, X, Y);
  return kind == FiberKind::vector ? Mat(R * value)
                                   : Mat(R * value - value * R);
}

namespace {

// Arguments carried to a nearby point by tangential projection.  Agrees
// with parallel transport to second order, which keeps every central
// difference built on it second-order accurate.
std::vector<Vec> projected_args(const SpherePoint& y,
                                std::span<const Vec> args) {
  std::vector<Vec> out;
  out.reserve(args.size());
  for (const Vec& a : args) out.push_back(project_tangent(y, a));
  return out;
}

}  // namespace

Mat covariant_derivative(const BundleValuedForm& omega, const SpherePoint& x,
                         const Vec& dir, std::span<const Vec> args,
                         Method method, const ToleranceProfile& prof) {
  if (static_cast<int>(args.size()) != omega.degree)
    throw std::invalid_argument("covariant_derivative: wrong argument count");
  if (method == Method::analytic) {
    if (!omega.has_exact_d1())
      throw CapabilityError(
          "analytic covariant derivative requested but the form carries no "
          "exact evaluator");
    return omega.exact_d1(x, dir, args);
  }

  const double speed = dir.norm();
  if (speed == 0.0) return omega.zero_value();
  const Vec dhat = dir / speed;
  const double h = prof.fd_step_first;

  auto sample = [&](double t) {
    const SpherePoint y = geodesic(x, dhat, t);
    const std::vector<Vec> targs = projected_args(y, args);
    return project_value(*omega.bundle, omega.kind, x, omega.eval(y, targs));
  };
  return speed / (2.0 * h) * (sample(h) - sample(-h));
}

Mat second_covariant_derivative(const BundleValuedForm& omega,
                                const SpherePoint& x, const Vec& outer,
                                const Vec& inner, std::span<const Vec> args,
                                Method method, const ToleranceProfile& prof) {
  if (method == Method::analytic) {
    if (!omega.has_exact_d2())
      throw CapabilityError(
          "analytic second covariant derivative requested but the form "
          "carries no exact evaluator");
    return omega.exact_d2(x, outer, inner, args);
  }

  const double speed = outer.norm();
  if (speed == 0.0) return omega.zero_value();
  const Vec what = outer / speed;
  const double h = prof.fd_step_second;

  // D^2_{W,Z} = D_W (D_{Ztilde} omega) with Ztilde and the slot arguments
  // carried by projection; the correction term D_{nabla_W Ztilde} vanishes
  // to the order of the scheme.
  auto sample = [&](double t) {
    const SpherePoint y = geodesic(x, what, t);
    const Vec zt = project_tangent(y, inner);
    const std::vector<Vec> targs = projected_args(y, args);
    const Mat F = covariant_derivative(omega, y, zt, targs, Method::fd, prof);
    return project_value(*omega.bundle, omega.kind, x, F);
  };
  return speed / (2.0 * h) * (sample(h) - sample(-h));
}

Mat rough_laplacian(const BundleValuedForm& omega, const SpherePoint& x,
                    const TangentFrame& frame, std::span<const Vec> args,
                    Method method, const ToleranceProfile& prof) {
  Mat acc = omega.zero_value();
  for (int j = 0; j < frame.size(); ++j) {
    const Vec ej = frame.e(j);
    acc += second_covariant_derivative(omega, x, ej, ej, args, method, prof);
  }
  return acc;
}

namespace {

Mat alternating_derivative_sum(const BundleValuedForm& omega,
                               const SpherePoint& x,
                               std::span<const Vec> dargs, Method method,
                               const ToleranceProfile& prof) {
  Mat acc = omega.zero_value();
  std::vector<Vec> rest(dargs.size() - 1);
  double sign = 1.0;
  for (std::size_t i = 0; i < dargs.size(); ++i) {
    std::size_t k = 0;
    for (std::size_t j = 0; j < dargs.size(); ++j)
      if (j != i) rest[k++] = dargs[j];
    acc += sign * covariant_derivative(omega, x, dargs[i], rest, method, prof);
    sign = -sign;
  }
  return acc;
}

}  // namespace

BundleValuedForm exterior_d(const BundleValuedForm& omega, Method method,
                            const ToleranceProfile& prof) {
  if (omega.degree > 1)
    throw CapabilityError("exterior_d supports degrees 0 and 1 only");

  BundleValuedForm d;
  d.degree = omega.degree + 1;
  d.kind = omega.kind;
  d.bundle = omega.bundle;
  auto parent = std::make_shared<BundleValuedForm>(omega);
  d.eval = [parent, method, prof](const SpherePoint& x,
                                  std::span<const Vec> args) {
    return alternating_derivative_sum(*parent, x, args, method, prof);
  };
  if (omega.has_exact_d2()) {
    d.exact_d1 = [parent](const SpherePoint& x, const Vec& dir,
                          std::span<const Vec> args) {
      // (D_Z d omega)(X_0..X_k) = sum (-1)^i (D^2_{Z,X_i} omega)(rest)
      Mat acc = parent->zero_value();
      std::vector<Vec> rest(args.size() - 1);
      double sign = 1.0;
      for (std::size_t i = 0; i < args.size(); ++i) {
        std::size_t k = 0;
        for (std::size_t j = 0; j < args.size(); ++j)
          if (j != i) rest[k++] = args[j];
        acc += sign * parent->exact_d2(x, dir, args[i], rest);
        sign = -sign;
      }
      return acc;
    };
  }
  return d;
}

Mat codifferential(const BundleValuedForm& omega, const SpherePoint& x,
                   const TangentFrame& frame, std::span<const Vec> args,
                   Method method, const ToleranceProfile& prof) {
  if (omega.degree == 0) return omega.zero_value();
  if (static_cast<int>(args.size()) != omega.degree - 1)
    throw std::invalid_argument("codifferential: wrong argument count");

  Mat acc = omega.zero_value();
  std::vector<Vec> slot(omega.degree);
  for (std::size_t i = 0; i < args.size(); ++i) slot[i + 1] = args[i];
  for (int s = 0; s < frame.size(); ++s) {
    slot[0] = frame.e(s);
    acc -= covariant_derivative(omega, x, frame.e(s), slot, method, prof);
  }
  return acc;
}

Mat weitzenbock_term(const BundleValuedForm& omega, const SpherePoint& x,
                     const TangentFrame& frame, std::span<const Vec> args) {
  const WeitzenbockConstants wc(omega.bundle->base_dim());
  const auto& bundle = *omega.bundle;
  if (omega.degree == 1) {
    const Vec& X = args[0];
    Mat acc = wc.ricci_factor * omega.eval(x, args);
    std::vector<Vec> slot(1);
    for (int j = 0; j < frame.size(); ++j) {
      slot[0] = frame.e(j);
      acc += curvature_action(bundle, omega.kind, x, frame.e(j), X,
                              omega.eval(x, slot));
    }
    return acc;
  }
  if (omega.degree == 2) {
    const Vec& X = args[0];
    const Vec& Y = args[1];
    Mat acc = wc.two_form_factor * omega.eval(x, args);
    std::vector<Vec> slot(2);
    for (int j = 0; j < frame.size(); ++j) {
      const Vec ej = frame.e(j);
      slot[0] = ej;
      slot[1] = Y;
      acc += curvature_action(bundle, omega.kind, x, ej, X, omega.eval(x, slot));
      slot[1] = X;
      acc -= curvature_action(bundle, omega.kind, x, ej, Y, omega.eval(x, slot));
    }
    return acc;
  }
  throw CapabilityError("weitzenbock_term supports degrees 1 and 2 only");
}

double value_norm(const Mat& value) { return value.norm(); }

double bochner_residual(const BundleValuedForm& omega, const SpherePoint& x,
                        const TangentFrame& frame, Method method,
                        const ToleranceProfile& prof) {
  if (omega.degree != 1 && omega.degree != 2)
    throw CapabilityError("bochner_residual supports degrees 1 and 2 only");

  // d_D d_D^* omega: the codifferential as a (degree-1)-form, then d.
  auto parent = std::make_shared<BundleValuedForm>(omega);
  BundleValuedForm costar;
  costar.degree = omega.degree - 1;
  costar.kind = omega.kind;
  costar.bundle = omega.bundle;
  costar.eval = [parent, method, prof](const SpherePoint& y,
                                       std::span<const Vec> args) {
    return codifferential(*parent, y, tangent_frame(y), args, method, prof);
  };
  const BundleValuedForm d_costar = exterior_d(costar, method, prof);

  // d_D^* d_D omega: the exterior derivative as a (degree+1)-form evaluator
  // (internally allowed at degree 3), then the frame trace.
  BundleValuedForm dform;
  dform.degree = omega.degree + 1;
  dform.kind = omega.kind;
  dform.bundle = omega.bundle;
  dform.eval = [parent, method, prof](const SpherePoint& y,
                                      std::span<const Vec> args) {
    return alternating_derivative_sum(*parent, y, args, method, prof);
  };

  auto residual_at = [&](std::span<const Vec> args) {
    const Mat hodge = d_costar.eval(x, args) +
                      codifferential(dform, x, frame, args, method, prof);
    const Mat lap = rough_laplacian(omega, x, frame, args, method, prof);
    const Mat S = weitzenbock_term(omega, x, frame, args);
    return hodge + lap - S;
  };

  double acc = 0.0;
  if (omega.degree == 1) {
    std::vector<Vec> args(1);
    for (int i = 0; i < frame.size(); ++i) {
      args[0] = frame.e(i);
      acc += residual_at(args).squaredNorm();
    }
  } else {
    std::vector<Vec> args(2);
    for (int i = 0; i < frame.size(); ++i)
      for (int j = i + 1; j < frame.size(); ++j) {
        args[0] = frame.e(i);
        args[1] = frame.e(j);
        acc += residual_at(args).squaredNorm();
      }
  }
  return std::sqrt(acc);
}

BundleValuedForm curvature_form(std::shared_ptr<const VectorBundle> bundle) {
  BundleValuedForm R;
  R.degree = 2;
  R.kind = FiberKind::endomorphism;
  R.bundle = bundle;
  R.eval = [bundle](const SpherePoint& y, std::span<const Vec> args) {
    return bundle->curvature(y, args[0], args[1]);
  };
  if (bundle->has_curvature_derivative()) {
    R.exact_d1 = [bundle](const SpherePoint& y, const Vec& dir,
                          std::span<const Vec> args) {
      return bundle->curvature_derivative(y, dir, args[0], args[1]);
    };
  }
  return R;
}

double bianchi_residual(std::shared_ptr<const VectorBundle> bundle,
                        const SpherePoint& x, const TangentFrame& frame,
                        Method method, const ToleranceProfile& prof) {
  const BundleValuedForm R = curvature_form(std::move(bundle));

  double worst = 0.0;
  std::vector<Vec> args(2);
  for (int i = 0; i < frame.size(); ++i)
    for (int j = i + 1; j < frame.size(); ++j)
      for (int k = j + 1; k < frame.size(); ++k) {
        const Vec ei = frame.e(i), ej = frame.e(j), ek = frame.e(k);
        Mat acc;
        args[0] = ej;
        args[1] = ek;
        acc = covariant_derivative(R, x, ei, args, method, prof);
        args[0] = ek;
        args[1] = ei;
        acc += covariant_derivative(R, x, ej, args, method, prof);
        args[0] = ei;
        args[1] = ej;
        acc += covariant_derivative(R, x, ek, args, method, prof);
        worst = std::max(worst, acc.norm());
      }
  return worst;
}

double form_norm(const BundleValuedForm& omega, const SpherePoint& x,
                 const TangentFrame& frame) {
  if (omega.degree == 0) {
    return omega.eval(x, {}).norm();
  }
  double acc = 0.0;
  if (omega.degree == 1) {
    std::vector<Vec> args(1);
    for (int i = 0; i < frame.size(); ++i) {
      args[0] = frame.e(i);
      acc += omega.eval(x, args).squaredNorm();
    }
  } else if (omega.degree == 2) {
    std::vector<Vec> args(2);
    for (int i = 0; i < frame.size(); ++i)
      for (int j = i + 1; j < frame.size(); ++j) {
        args[0] = frame.e(i);
        args[1] = frame.e(j);
        acc += omega.eval(x, args).squaredNorm();
      }
  } else {
    throw CapabilityError("form_norm supports degrees 0..2");
  }
  return std::sqrt(acc);
}

double form_inner(const BundleValuedForm& a, const BundleValuedForm& b,
                  const SpherePoint& x, const TangentFrame& frame) {
  if (a.degree != b.degree)
    throw std::invalid_argument("form_inner: degree mismatch");
  auto dot = [](const Mat& u, const Mat& v) {
    return (u.array() * v.array()).sum();
  };
  if (a.degree == 0) return dot(a.eval(x, {}), b.eval(x, {}));
  double acc = 0.0;
  if (a.degree == 1) {
    std::vector<Vec> args(1);
    for (int i = 0; i < frame.size(); ++i) {
      args[0] = frame.e(i);
      acc += dot(a.eval(x, args), b.eval(x, args));
    }
    return acc;
  }
  if (a.degree == 2) {
    std::vector<Vec> args(2);
    for (int i = 0; i < frame.size(); ++i)
      for (int j = i + 1; j < frame.size(); ++j) {
        args[0] = frame.e(i);
        args[1] = frame.e(j);
        acc += dot(a.eval(x, args), b.eval(x, args));
      }
    return acc;
  }
  throw CapabilityError("form_inner supports degrees 0..2");
}

}  // namespace jacobi
