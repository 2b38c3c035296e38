#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "szmk/moments.hpp"
#include "szmk/operator.hpp"

using szmk::BivariateMomentTable;
using szmk::BivariateParams;

TEST_CASE("bivariate moment table against the brute-force double series") {
  for (long long m : {2, 5, 10}) {
    for (double a : {1.1, 1.5, 3.0}) {
      for (auto [x, y] : {std::pair{0.0, 0.5}, {0.3, 0.8}, {1.0, 2.0}}) {
        const BivariateMomentTable t = szmk::bivariate_moments({m, a}, x, y);
        CHECK(t.y00 == 1.0);
        CHECK(oracle::rel_diff(t.y11, oracle::bivariate_moment(m, a, x, y, 1, 1)) < 1e-9);
        CHECK(oracle::rel_diff(t.y22, oracle::bivariate_moment(m, a, x, y, 2, 2)) < 1e-9);
        CHECK(oracle::rel_diff(t.y33, oracle::bivariate_moment(m, a, x, y, 3, 3)) < 1e-9);
        CHECK(oracle::rel_diff(t.cx1, oracle::bivariate_central(m, a, x, y, 0, 1)) < 1e-9);
        CHECK(oracle::rel_diff(t.cy1, oracle::bivariate_central(m, a, x, y, 1, 1)) < 1e-9);
        CHECK(oracle::rel_diff(t.cx2, oracle::bivariate_central(m, a, x, y, 0, 2)) < 1e-9);
        CHECK(oracle::rel_diff(t.cy2, oracle::bivariate_central(m, a, x, y, 1, 2)) < 1e-9);
        CHECK(t.cx2 >= 0.0);
        CHECK(t.cy2 >= 0.0);
      }
    }
  }
}

TEST_CASE("bivariate entries factor into univariate quantities") {
  const BivariateParams params{4, 2.0};
  const double x = 0.3;
  const double y = 0.8;
  const BivariateMomentTable t = szmk::bivariate_moments(params, x, y);
  const szmk::MomentVector mx = szmk::raw_moments(params.axis(), x);
  const szmk::MomentVector my = szmk::raw_moments(params.axis(), y);
  CHECK(std::abs(t.y11 - mx.m1 * my.m1) <= 1e-12);
  CHECK(std::abs(t.y22 - mx.m2 * my.m2) <= 1e-12);
  const szmk::CentralMomentVector cx = szmk::central_moments(params.axis(), x);
  const szmk::CentralMomentVector cy = szmk::central_moments(params.axis(), y);
  CHECK(t.cx1 == cx.c1);
  CHECK(t.cy1 == cy.c1);
  CHECK(t.cx2 == cx.c2);
  CHECK(t.cy2 == cy.c2);
}

TEST_CASE("y22 agrees with the operator applied to u^2 v^2") {
  const double closed = szmk::bivariate_moments({4, 2.0}, 0.3, 0.8).y22;
  const double series =
      szmk::apply_bivariate({4, 2.0},
                            szmk::BivariateFunction{[](double u, double v) {
                              return u * u * v * v;
                            }},
                            0.3, 0.8)
          .value;
  CHECK(oracle::rel_diff(closed, series) < 1e-9);
}
