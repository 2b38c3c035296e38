#include "szmk/certify.hpp"

#include <algorithm>
#include <cmath>

#include "szmk/moments.hpp"
#include "szmk/operator.hpp"

namespace szmk {
namespace {

double clamp_step(double step, double extent, long long max_nodes) {
  return std::max(step, extent / static_cast<double>(max_nodes));
}

// Hoelder-class check over all grid pairs.  For alpha = 1 the pairwise ratio
// is maximised on adjacent nodes, so one pass suffices.
void verify_lipschitz(const ScalarFunction& f, double end, const LipschitzHint& hint) {
  const int nodes = 513;
  const double h = end / (nodes - 1);
  std::vector<double> v(nodes);
  for (int i = 0; i < nodes; ++i) v[i] = f.eval(i * h);
  const double tol = 1e-9 * hint.constant + 1e-12;
  if (hint.exponent == 1.0) {
    for (int i = 0; i + 1 < nodes; ++i) {
      const double rise = std::abs(v[i + 1] - v[i]);
      if (rise > hint.constant * h + tol) {
        fail(ErrorKind::LipschitzHintViolated,
             "|f(u)-f(x)| exceeds M|u-x| at u=" + std::to_string((i + 1) * h) +
                 ", x=" + std::to_string(i * h));
      }
    }
    return;
  }
  for (int i = 0; i < nodes; ++i) {
    for (int j = i + 1; j < nodes; ++j) {
      const double gap = (j - i) * h;
      if (std::abs(v[j] - v[i]) > hint.constant * std::pow(gap, hint.exponent) + tol) {
        fail(ErrorKind::LipschitzHintViolated,
             "|f(u)-f(x)| exceeds M|u-x|^alpha at u=" + std::to_string(j * h) +
                 ", x=" + std::to_string(i * h));
      }
    }
  }
}

// Product-form hint checked against the fixed base point.
void verify_mixed_at_base(const BivariateFunction& f, const Box& box, double x, double y,
                          const MixedLipschitzHint& hint) {
  const int nodes = 129;
  const double hx = box.x_hi / (nodes - 1);
  const double hy = box.y_hi / (nodes - 1);
  const double base = f.eval(x, y);
  const double tol = 1e-9 * (hint.constant + std::abs(base)) + 1e-12;
  for (int j = 0; j < nodes; ++j) {
    const double v = j * hy;
    for (int i = 0; i < nodes; ++i) {
      const double u = i * hx;
      const double lhs = std::abs(f.eval(u, v) - base);
      const double rhs = hint.constant * std::pow(std::abs(u - x), hint.exponent_x) *
                         std::pow(std::abs(v - y), hint.exponent_y);
      if (lhs > rhs + tol) {
        fail(ErrorKind::LipschitzHintViolated,
             "|f(u,v)-f(x,y)| exceeds M|u-x|^a1 |v-y|^a2 at u=" + std::to_string(u) +
                 ", v=" + std::to_string(v) + " against base (" + std::to_string(x) +
                 "," + std::to_string(y) + ")");
      }
    }
  }
}

BoundCertificate seal(BoundKind kind, double x, double y, double actual, double bound,
                      double slack) {
  BoundCertificate cert;
  cert.kind = kind;
  cert.x = x;
  cert.y = y;
  cert.actual_error = actual;
  cert.bound_value = bound;
  cert.margin = bound - actual;
  cert.slack = slack;
  cert.pass = cert.margin >= -slack;
  return cert;
}

}  // namespace

BoundCertificate certify_modulus_bound(const OperatorParams& params,
                                       const ScalarFunction& f, double x,
                                       const TruncationPolicy& trunc,
                                       const QuadratureRule& quad,
                                       std::optional<double> domain_end,
                                       std::optional<double> grid_step,
                                       const CertifyOptions& opts) {
  const double scale = std::sqrt(delta(params, x));
  const EvalResult eval = apply(params, f, x, trunc, quad);
  const double actual = std::abs(eval.value - f.eval(x));

  const double end = domain_end.value_or(std::max(eval.t_end, x + scale));
  double h = grid_step.value_or(scale / opts.grid_divisor_univariate);
  h = clamp_step(h, end, opts.max_nodes);
  const ModulusEstimate est = modulus(f, scale, end, h);

  const double bound = opts.bound_scale * 2.0 * est.value;
  const double f_sup = f.bound_on ? f.bound_on(end) : est.sup_abs;
  const double slack = 2.0 * est.grid_error + 2.0 * f_sup * trunc.tail_mass_epsilon;
  return seal(BoundKind::ModulusUnivariate, x, 0.0, actual, bound, slack);
}

BoundCertificate certify_lipschitz_bound(const OperatorParams& params,
                                         const ScalarFunction& f, double x,
                                         const TruncationPolicy& trunc,
                                         const QuadratureRule& quad,
                                         const CertifyOptions& opts) {
  if (!f.lipschitz) {
    fail(ErrorKind::InvalidArgument, "certify_lipschitz_bound needs a lipschitz hint");
  }
  const EvalResult eval = apply(params, f, x, trunc, quad);
  verify_lipschitz(f, std::max(eval.t_end, x + 1.0), *f.lipschitz);

  const double fx = f.eval(x);
  const double actual = std::abs(eval.value - fx);
  const double bound = opts.bound_scale * f.lipschitz->constant *
                       std::pow(delta(params, x), 0.5 * f.lipschitz->exponent);
  const double f_sup = f.bound_on ? f.bound_on(eval.t_end) : std::abs(fx) + 1.0;
  const double slack =
      1e-12 * std::max(1.0, std::abs(fx)) + 2.0 * f_sup * trunc.tail_mass_epsilon;
  return seal(BoundKind::LipschitzUnivariate, x, 0.0, actual, bound, slack);
}

BoundCertificate certify_bivariate_bound(const BivariateParams& params,
                                         const BivariateFunction& f, double x, double y,
                                         const TruncationPolicy& trunc,
                                         const QuadratureRule& quad,
                                         std::optional<Box> domain,
                                         std::optional<double> grid_step,
                                         const CertifyOptions& opts) {
  const OperatorParams axis = params.axis();
  const double sx = std::sqrt(delta(axis, x));
  const double sy = std::sqrt(delta(axis, y));
  const BivariateEvalResult eval = apply_bivariate(params, f, x, y, trunc, quad);
  const double actual = std::abs(eval.value - f.eval(x, y));

  const Box box = domain.value_or(Box{std::max(eval.x_end, x + sx),
                                      std::max(eval.y_end, y + sy)});
  double h = grid_step.value_or(std::min(sx, sy) / opts.grid_divisor_bivariate);
  // Keep the grid at or below ~max_nodes nodes in total.
  const long long per_axis =
      static_cast<long long>(std::sqrt(static_cast<double>(opts.max_nodes)));
  h = std::max({h, clamp_step(h, box.x_hi, per_axis), clamp_step(h, box.y_hi, per_axis)});
  const BivariateModulusEstimate est = modulus_bivariate(f, sx, sy, box, h, h);

  const double bound = opts.bound_scale * 4.0 * est.value;
  const double f_sup = f.bound_on ? f.bound_on(box.x_hi, box.y_hi) : est.sup_abs;
  const double slack = 4.0 * est.grid_error + 4.0 * f_sup * trunc.tail_mass_epsilon;
  return seal(BoundKind::ModulusBivariate, x, y, actual, bound, slack);
}

BoundCertificate certify_bivariate_lipschitz(const BivariateParams& params,
                                             const BivariateFunction& f, double x,
                                             double y, const TruncationPolicy& trunc,
                                             const QuadratureRule& quad,
                                             const CertifyOptions& opts) {
  if (!f.lipschitz) {
    fail(ErrorKind::InvalidArgument,
         "certify_bivariate_lipschitz needs a mixed lipschitz hint");
  }
  const OperatorParams axis = params.axis();
  const BivariateEvalResult eval = apply_bivariate(params, f, x, y, trunc, quad);
  const Box box{std::max(eval.x_end, x + 1.0), std::max(eval.y_end, y + 1.0)};
  verify_mixed_at_base(f, box, x, y, *f.lipschitz);

  const double fxy = f.eval(x, y);
  const double actual = std::abs(eval.value - fxy);
  const double bound = opts.bound_scale * f.lipschitz->constant *
                       std::pow(delta(axis, x), 0.5 * f.lipschitz->exponent_x) *
                       std::pow(delta(axis, y), 0.5 * f.lipschitz->exponent_y);
  const double f_sup = f.bound_on ? f.bound_on(box.x_hi, box.y_hi) : std::abs(fxy) + 1.0;
  const double slack =
      1e-12 * std::max(1.0, std::abs(fxy)) + 2.0 * f_sup * trunc.tail_mass_epsilon;
  return seal(BoundKind::LipschitzBivariate, x, y, actual, bound, slack);
}

}  // namespace szmk
