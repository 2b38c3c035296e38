#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "szmk/stable.hpp"
#include "szmk/types.hpp"

namespace szmk {

struct SweepResult {
  double mass = 0.0;        // accumulated weight mass (informational)
  double tail_bound = 0.0;  // rigorous bound on the un-summed weight mass
  long long k_lo = 0;
  long long k_hi = 0;
};

namespace detail {

// Bound on the mass beyond the up frontier: the term ratios above the mode
// shrink geometrically, sum w_{hi+1} (1 + r + r^2 + ...) with r = lambda/(hi+2).
inline double up_tail_bound(double next_weight, long long hi, double lambda, long long cap) {
  if (hi >= cap) {
    // Nothing beyond the cap may be summed; certify only when the cap sits
    // above the mode so the geometric bound covers the cut-off mass.
    if (static_cast<double>(cap + 1) <= lambda) {
      return std::numeric_limits<double>::infinity();
    }
    const double ratio = lambda / static_cast<double>(cap + 2);
    return next_weight / (1.0 - ratio);
  }
  const double ratio = lambda / static_cast<double>(hi + 2);
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  return next_weight / (1.0 - ratio);
}

// Below the mode the downward ratios k/lambda shrink as k falls.
inline double down_tail_bound(double next_weight, long long lo, double lambda) {
  if (lo <= 0) return 0.0;
  const double ratio = static_cast<double>(lo - 1) / lambda;
  return next_weight / (1.0 - ratio);
}

}  // namespace detail

/// Walk the Poisson(lambda) weights outward from the mode, taking the heavier
/// frontier next, until the un-summed mass is provably below tail_eps or the
/// index range [0, cap] is exhausted.  per_term(k, w) sees every visited term
/// in a deterministic order.
template <typename F>
SweepResult sweep_poisson(double lambda, double tail_eps, long long cap, F&& per_term) {
  SweepResult out;
  if (lambda == 0.0) {
    per_term(0, 1.0);
    out.mass = 1.0;
    return out;
  }
  const double log_lambda = std::log(lambda);
  long long k0 = static_cast<long long>(std::floor(lambda));
  if (k0 > cap) k0 = cap;
  const double w0 =
      std::exp(-lambda + k0 * log_lambda - std::lgamma(static_cast<double>(k0) + 1.0));

  stable::KahanSum mass;
  long long lo = k0;
  long long hi = k0;
  double w_lo = w0;
  double w_hi = w0;
  mass.add(w0);
  per_term(k0, w0);

  for (;;) {
    const double next_down = lo > 0 ? w_lo * static_cast<double>(lo) / lambda : 0.0;
    const double next_up = hi < cap ? w_hi * lambda / static_cast<double>(hi + 1) : 0.0;
    const double down_bound = detail::down_tail_bound(next_down, lo, lambda);
    const double up_bound = detail::up_tail_bound(
        hi < cap ? next_up : w_hi * lambda / static_cast<double>(hi + 1), hi, lambda,
        cap);
    if (down_bound + up_bound <= tail_eps) {
      out.tail_bound = down_bound + up_bound;
      break;
    }
    if (lo == 0 && hi >= cap) {
      fail(ErrorKind::TruncationFailure,
           "series cutoff reached at k in [0," + std::to_string(hi) + "] (cap " +
               std::to_string(cap) + ") with un-summed mass bound " +
               std::to_string(down_bound + up_bound) + " above tail_mass_epsilon " +
               std::to_string(tail_eps));
    }
    if ((next_down >= next_up && lo > 0) || hi >= cap) {
      --lo;
      w_lo = next_down;
      mass.add(w_lo);
      per_term(lo, w_lo);
    } else {
      ++hi;
      w_hi = next_up;
      mass.add(w_hi);
      per_term(hi, w_hi);
    }
  }
  out.mass = mass.value();
  out.k_lo = lo;
  out.k_hi = hi;
  return out;
}

/// Materialised sweep, sorted by index; used where the weights are reused
/// (one list per axis of the bivariate operator).
struct WeightTable {
  std::vector<std::pair<long long, double>> terms;
  double mass = 0.0;
  double tail_bound = 0.0;
  long long k_hi = 0;
};

WeightTable collect_poisson(double lambda, double tail_eps, long long cap);

}  // namespace szmk
