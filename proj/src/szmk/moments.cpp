#include "szmk/moments.hpp"

#include <cmath>

#include "szmk/operator.hpp"
#include "szmk/stable.hpp"

namespace szmk {
namespace {

void check_point(double x, const char* name) {
  if (!std::isfinite(x) || x < 0.0) {
    fail(ErrorKind::InvalidArgument, std::string(name) + " must be finite and >= 0");
  }
}

// All closed forms below are polynomials in r = lambda/n = rho*x (the scaled
// mean) and 1/n; the central ones are grouped in d = r - x, which is computed
// without cancellation, so they stay accurate for n up to ~1e6.
struct Scaled {
  double inv_n;
  double r;  // lambda / n
  double d;  // r - x
};

Scaled scaled_mean(const OperatorParams& params, double x) {
  const double excess = stable::mean_ratio_excess(params.a, params.n);
  const double inv_n = 1.0 / static_cast<double>(params.n);
  const double d = x * excess;
  return Scaled{inv_n, x + d, d};
}

double second_central(const Scaled& s, double x) {
  return s.inv_n * s.inv_n / 3.0 + (x + 2.0 * s.d) * s.inv_n + s.d * s.d;
}

}  // namespace

MomentVector raw_moments(const OperatorParams& params, double x) {
  params.validate();
  check_point(x, "x");
  const Scaled s = scaled_mean(params, x);
  MomentVector m;
  m.m0 = 1.0;
  m.m1 = s.r + 0.5 * s.inv_n;
  m.m2 = s.r * s.r + s.inv_n * (2.0 * s.r + s.inv_n / 3.0);
  m.m3 = s.r * s.r * s.r +
         s.inv_n * (4.5 * s.r * s.r + s.inv_n * (3.5 * s.r + 0.25 * s.inv_n));
  return m;
}

CentralMomentVector central_moments(const OperatorParams& params, double x) {
  params.validate();
  check_point(x, "x");
  const Scaled s = scaled_mean(params, x);
  const double d = s.d;
  const double inv_n = s.inv_n;
  CentralMomentVector c;
  c.c1 = 0.5 * inv_n + d;
  c.c2 = second_central(s, x);
  c.c3 = d * d * d + inv_n * (1.5 * d * (2.0 * x + 3.0 * d) +
                              inv_n * ((2.5 * x + 3.5 * d) + 0.25 * inv_n));
  c.c4 = d * d * d * d +
         inv_n * (2.0 * d * d * (3.0 * x + 4.0 * d) +
                  inv_n * ((3.0 * x * x + 16.0 * x * d + 15.0 * d * d) +
                           inv_n * ((5.0 * x + 6.0 * d) + 0.2 * inv_n)));
  return c;
}

double delta(const OperatorParams& params, double x) {
  params.validate();
  check_point(x, "x");
  return second_central(scaled_mean(params, x), x);
}

BivariateMomentTable bivariate_moments(const BivariateParams& params, double x,
                                       double y) {
  params.validate();
  check_point(x, "x");
  check_point(y, "y");
  const OperatorParams axis = params.axis();
  const MomentVector mx = raw_moments(axis, x);
  const MomentVector my = raw_moments(axis, y);
  const CentralMomentVector cx = central_moments(axis, x);
  const CentralMomentVector cy = central_moments(axis, y);
  BivariateMomentTable t;
  t.y00 = mx.m0 * my.m0;
  t.y11 = mx.m1 * my.m1;
  t.y22 = mx.m2 * my.m2;
  t.y33 = mx.m3 * my.m3;
  t.cx1 = cx.c1;
  t.cy1 = cy.c1;
  t.cx2 = cx.c2;
  t.cy2 = cy.c2;
  return t;
}

}  // namespace szmk
