#include "szmk/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace szmk {
namespace {

// Legendre P_p(x) and its derivative via the three-term recurrence.
std::pair<double, double> legendre(int p, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int j = 2; j <= p; ++j) {
    const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  const double deriv = p * (x * p1 - p0) / (x * x - 1.0);
  return {p1, deriv};
}

CellRule build_rule(int p) {
  CellRule rule;
  rule.nodes.resize(p);
  rule.weights.resize(p);
  if (p == 1) {
    rule.nodes[0] = 0.5;
    rule.weights[0] = 1.0;
    return rule;
  }
  for (int i = 0; i < (p + 1) / 2; ++i) {
    // Tricomi-style initial guess, then Newton on P_p.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (p + 0.5));
    double value = 0.0;
    double deriv = 0.0;
    for (int it = 0; it < 100; ++it) {
      std::tie(value, deriv) = legendre(p, x);
      const double step = value / deriv;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    std::tie(value, deriv) = legendre(p, x);
    const double w = 2.0 / ((1.0 - x * x) * deriv * deriv);
    // Map [-1,1] -> [0,1]; the 1/2 Jacobian turns integral weights into
    // averaging weights.
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.nodes[p - 1 - i] = 0.5 * (1.0 + x);
    rule.weights[i] = 0.5 * w;
    rule.weights[p - 1 - i] = 0.5 * w;
  }
  return rule;
}

}  // namespace

const CellRule& cell_rule(int points) {
  if (points < 1 || points > 64) {
    fail(ErrorKind::InvalidArgument,
         "points_per_cell must be in [1,64], got " + std::to_string(points));
  }
  static std::mutex mutex;
  static std::map<int, CellRule> cache;
  std::scoped_lock lock(mutex);
  auto it = cache.find(points);
  if (it == cache.end()) {
    it = cache.emplace(points, build_rule(points)).first;
  }
  return it->second;
}

}  // namespace szmk
