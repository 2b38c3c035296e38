#pragma once

#include <cmath>

#include "szmk/types.hpp"

namespace szmk::stable {

/// a^{1/n} - 1, evaluated as expm1(log(a)/n) so that large n keeps full
/// relative precision.
double root_expm1(double a, long long n);

/// rho = log(a) / (n (a^{1/n} - 1)).  Tends to 1 from below as n grows.
double mean_ratio(double a, long long n);

/// rho - 1 without cancellation: for small z = log(a)/n the difference
/// log(a) - n*expm1(z) is computed from the series z^2(1/2 + z/6 + ...).
double mean_ratio_excess(double a, long long n);

/// Neumaier-compensated accumulator.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

}  // namespace szmk::stable
