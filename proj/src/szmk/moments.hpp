#pragma once

#include "szmk/types.hpp"

namespace szmk {

/// Values of the operator on the monomials e_i, i = 0..3, at one (params, x).
struct MomentVector {
  double m0 = 1.0;
  double m1 = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
};

/// Central moments S((u-x)^i; x), i = 1..4.
struct CentralMomentVector {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
};

/// Bivariate moments on e_ii plus the per-axis central moments; every entry
/// factors into products of univariate quantities.
struct BivariateMomentTable {
  double y00 = 1.0;
  double y11 = 0.0;
  double y22 = 0.0;
  double y33 = 0.0;
  double cx1 = 0.0;
  double cy1 = 0.0;
  double cx2 = 0.0;
  double cy2 = 0.0;
};

MomentVector raw_moments(const OperatorParams& params, double x);
CentralMomentVector central_moments(const OperatorParams& params, double x);

/// Second central moment, the rate scale of the error bounds.
double delta(const OperatorParams& params, double x);

BivariateMomentTable bivariate_moments(const BivariateParams& params, double x,
                                       double y);

}  // namespace szmk
