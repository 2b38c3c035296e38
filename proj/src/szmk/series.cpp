#include "szmk/series.hpp"

#include <algorithm>

namespace szmk {

WeightTable collect_poisson(double lambda, double tail_eps, long long cap) {
  WeightTable table;
  const SweepResult swept = sweep_poisson(
      lambda, tail_eps, cap,
      [&table](long long k, double w) { table.terms.emplace_back(k, w); });
  std::sort(table.terms.begin(), table.terms.end());
  table.mass = swept.mass;
  table.tail_bound = swept.tail_bound;
  table.k_hi = swept.k_hi;
  return table;
}

}  // namespace szmk
