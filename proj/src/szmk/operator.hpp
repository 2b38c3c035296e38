#pragma once

#include "szmk/types.hpp"

namespace szmk {

/// k-th series weight at x.  For fixed (params, x) the family over k is the
/// Poisson mass with mean mean_parameter(params, x); evaluated in log space.
double weight(const OperatorParams& params, long long k, double x);

/// Poisson mean lambda = x log(a) / (a^{1/n} - 1).
double mean_parameter(const OperatorParams& params, double x);

/// Truncated evaluation of the summation-integral operator
///   n * sum_k weight(k, x) * integral_{k/n}^{(k+1)/n} f(u) du
/// with per-cell Gauss-Legendre quadrature.
EvalResult apply(const OperatorParams& params, const ScalarFunction& f, double x,
                 const TruncationPolicy& trunc = {}, const QuadratureRule& quad = {});

/// Classical Kantorovich baseline: same series with Poisson(n x) weights.
EvalResult apply_kantorovich(long long n, const ScalarFunction& f, double x,
                             const TruncationPolicy& trunc = {},
                             const QuadratureRule& quad = {});

/// Bivariate tensor operator with product weights and a shared degree m.
/// Each axis is truncated to mass 1 - tail_mass_epsilon/2 so the combined
/// un-summed mass stays below tail_mass_epsilon.
BivariateEvalResult apply_bivariate(const BivariateParams& params,
                                    const BivariateFunction& f, double x, double y,
                                    const TruncationPolicy& trunc = {},
                                    const QuadratureRule& quad = {});

}  // namespace szmk
