#pragma once

#include <span>

#include "szmk/types.hpp"

namespace szmk {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct Box {
  double x_hi = 0.0;
  double y_hi = 0.0;
};

/// Grid estimate of the modulus of continuity: sup of |f(u)-f(x)| over grid
/// pairs u, x in {0, h, 2h, ..} with |u-x| <= delta.  The grid sup is an
/// underestimate of the true sup; grid_error bounds the gap when a Lipschitz
/// hint is available and otherwise carries the observed h-scale oscillation.
struct ModulusEstimate {
  double delta_arg = 0.0;
  double value = 0.0;
  double grid_step = 0.0;
  Interval domain;
  double grid_error = 0.0;
  double sup_abs = 0.0;  // sup |f| over the grid, reused by certificates
};

ModulusEstimate modulus(const ScalarFunction& f, double delta, double domain_end,
                        double grid_step);

struct BivariateModulusEstimate {
  double delta_x = 0.0;
  double delta_y = 0.0;
  double value = 0.0;
  double step_x = 0.0;
  double step_y = 0.0;
  Box domain;
  double grid_error = 0.0;
  double sup_abs = 0.0;
};

BivariateModulusEstimate modulus_bivariate(const BivariateFunction& f, double delta_x,
                                           double delta_y, const Box& domain,
                                           double step_x, double step_y);

/// Largest spread max-min over index windows [i, i+width]; width 0 gives 0.
double max_window_spread(std::span<const double> values, long long width);

}  // namespace szmk
