#include "szmk/stable.hpp"

#include <cmath>

namespace szmk::stable {

double root_expm1(double a, long long n) {
  return std::expm1(std::log(a) / static_cast<double>(n));
}

double mean_ratio(double a, long long n) {
  return 1.0 + mean_ratio_excess(a, n);
}

double mean_ratio_excess(double a, long long n) {
  const double w = std::log(a);
  const double z = w / static_cast<double>(n);
  const double t = std::expm1(z);
  if (std::abs(z) < 1e-3) {
    // n*expm1(z) - w = n z^2 (1/2 + z/6 + z^2/24 + z^3/120 + z^4/720),
    // truncation error below double rounding for |z| < 1e-3.
    const double series =
        z * z * (0.5 + z * (1.0 / 6 + z * (1.0 / 24 + z * (1.0 / 120 + z / 720))));
    return -series / t;
  }
  return (w - static_cast<double>(n) * t) / (static_cast<double>(n) * t);
}

}  // namespace szmk::stable
