#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "szmk/types.hpp"

namespace szmk {

/// Gauss-Legendre rule rescaled to [0,1]; weights sum to 1, so applying it
/// to f yields the cell average rather than the integral.
struct CellRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule for the given node count (1..64).
const CellRule& cell_rule(int points);

/// Average of f over [lo, lo+width].  Non-finite samples abort.
template <typename F>
double cell_average(F&& f, double lo, double width, const CellRule& rule) {
  double acc = 0.0;
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    const double u = lo + width * rule.nodes[j];
    const double v = f(u);
    if (!std::isfinite(v)) {
      fail(ErrorKind::NonFiniteFunction,
           "function returned a non-finite value at node u=" + std::to_string(u));
    }
    acc += rule.weights[j] * v;
  }
  return acc;
}

}  // namespace szmk
