#include "szmk/operator.hpp"

#include <cmath>

#include "szmk/quadrature.hpp"
#include "szmk/series.hpp"
#include "szmk/stable.hpp"

namespace szmk {

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

void OperatorParams::validate() const {
  if (n < 1) fail(ErrorKind::InvalidArgument, "degree n must be >= 1");
  if (!(a > 1.0) || !std::isfinite(a)) {
    fail(ErrorKind::InvalidArgument, "base a must be finite and > 1");
  }
}

void BivariateParams::validate() const { axis().validate(); }

void TruncationPolicy::validate() const {
  if (!(tail_mass_epsilon > 0.0) || !(tail_mass_epsilon < 1.0)) {
    fail(ErrorKind::InvalidArgument, "tail_mass_epsilon must be in (0,1)");
  }
  if (hard_k_cap < 0) fail(ErrorKind::InvalidArgument, "hard_k_cap must be >= 0");
}

long long TruncationPolicy::cap_for(double lambda) const {
  if (hard_k_cap > 0) return hard_k_cap;
  return 10 * static_cast<long long>(std::ceil(lambda)) + 200;
}

void QuadratureRule::validate() const {
  if (points_per_cell < 1) {
    fail(ErrorKind::InvalidArgument, "points_per_cell must be >= 1");
  }
}

namespace {

void check_point(double x, const char* name) {
  if (!std::isfinite(x) || x < 0.0) {
    fail(ErrorKind::InvalidArgument, std::string(name) + " must be finite and >= 0");
  }
}

EvalResult sum_series(double lambda, long long n, const ScalarFunction& f,
                      const TruncationPolicy& trunc, const QuadratureRule& quad) {
  trunc.validate();
  quad.validate();
  const CellRule& rule = cell_rule(quad.points_per_cell);
  const double width = 1.0 / static_cast<double>(n);

  stable::KahanSum value;
  const SweepResult swept = sweep_poisson(
      lambda, trunc.tail_mass_epsilon, trunc.cap_for(lambda),
      [&](long long k, double w) {
        value.add(w * cell_average(f.eval, static_cast<double>(k) * width, width, rule));
      });

  EvalResult out;
  out.value = value.value();
  out.k_lo = swept.k_lo;
  out.k_hi = swept.k_hi;
  out.tail_mass = swept.tail_bound;
  out.t_end = static_cast<double>(swept.k_hi + 1) * width;
  if (f.bound_on) {
    out.error_budget = out.tail_mass * f.bound_on(out.t_end);
  }
  return out;
}

}  // namespace

double weight(const OperatorParams& params, long long k, double x) {
  params.validate();
  check_point(x, "x");
  if (k < 0) fail(ErrorKind::InvalidArgument, "k must be >= 0");
  const double lambda = mean_parameter(params, x);
  if (lambda == 0.0) return k == 0 ? 1.0 : 0.0;
  const double logw =
      -lambda + static_cast<double>(k) * std::log(lambda) -
      std::lgamma(static_cast<double>(k) + 1.0);
  const double w = std::exp(logw);
  if (!std::isfinite(w)) {
    fail(ErrorKind::NonFiniteFunction,
         "weight evaluated non-finite at k=" + std::to_string(k));
  }
  return w;
}

double mean_parameter(const OperatorParams& params, double x) {
  params.validate();
  check_point(x, "x");
  if (x == 0.0) return 0.0;
  return x * std::log(params.a) / stable::root_expm1(params.a, params.n);
}

EvalResult apply(const OperatorParams& params, const ScalarFunction& f, double x,
                 const TruncationPolicy& trunc, const QuadratureRule& quad) {
  const double lambda = mean_parameter(params, x);
  return sum_series(lambda, params.n, f, trunc, quad);
}

EvalResult apply_kantorovich(long long n, const ScalarFunction& f, double x,
                             const TruncationPolicy& trunc, const QuadratureRule& quad) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "degree n must be >= 1");
  check_point(x, "x");
  return sum_series(static_cast<double>(n) * x, n, f, trunc, quad);
}

BivariateEvalResult apply_bivariate(const BivariateParams& params,
                                    const BivariateFunction& f, double x, double y,
                                    const TruncationPolicy& trunc,
                                    const QuadratureRule& quad) {
  params.validate();
  check_point(x, "x");
  check_point(y, "y");
  trunc.validate();
  quad.validate();

  const OperatorParams axis = params.axis();
  const double lx = mean_parameter(axis, x);
  const double ly = mean_parameter(axis, y);
  const double axis_eps = 0.5 * trunc.tail_mass_epsilon;
  const WeightTable wx = collect_poisson(lx, axis_eps, trunc.cap_for(lx));
  const WeightTable wy = collect_poisson(ly, axis_eps, trunc.cap_for(ly));

  const CellRule& rule = cell_rule(quad.points_per_cell);
  const double width = 1.0 / static_cast<double>(params.m);

  stable::KahanSum value;
  for (const auto& [k1, w1] : wx.terms) {
    const double ulo = static_cast<double>(k1) * width;
    stable::KahanSum row;
    for (const auto& [k2, w2] : wy.terms) {
      const double vlo = static_cast<double>(k2) * width;
      const double avg = cell_average(
          [&](double u) {
            return cell_average([&](double v) { return f.eval(u, v); }, vlo, width, rule);
          },
          ulo, width, rule);
      row.add(w2 * avg);
    }
    value.add(w1 * row.value());
  }

  BivariateEvalResult out;
  out.value = value.value();
  out.tail_mass = std::min(1.0, wx.tail_bound + wy.tail_bound);
  out.x_end = static_cast<double>(wx.k_hi + 1) * width;
  out.y_end = static_cast<double>(wy.k_hi + 1) * width;
  if (f.bound_on) {
    out.error_budget = out.tail_mass * f.bound_on(out.x_end, out.y_end);
  }
  return out;
}

}  // namespace szmk
