#pragma once

#include "szmk/modulus.hpp"
#include "szmk/types.hpp"

namespace szmk {

enum class BoundKind {
  ModulusUnivariate,
  LipschitzUnivariate,
  ModulusBivariate,
  LipschitzBivariate,
};

/// Pointwise comparison of the realised operator error against a guaranteed
/// bound.  The slack covers grid underestimation of the modulus plus the
/// truncation budget; a certificate passes iff margin >= -slack.
struct BoundCertificate {
  BoundKind kind = BoundKind::ModulusUnivariate;
  double x = 0.0;
  double y = 0.0;
  double actual_error = 0.0;
  double bound_value = 0.0;
  double margin = 0.0;
  double slack = 0.0;
  bool pass = false;
};

struct CertifyOptions {
  // Multiplies the bound; 1.0 certifies the bound as stated, values below
  // 1 deliberately break it (negative-control runs).
  double bound_scale = 1.0;
  // Modulus grid resolution: h = sqrt(delta) / divisor per axis.
  double grid_divisor_univariate = 100.0;
  double grid_divisor_bivariate = 25.0;
  // Node-count ceiling per axis; h widens when the ceiling is hit.
  long long max_nodes = 2'000'000;
};

/// |S(f;x) - f(x)|  vs  2 w(f; sqrt(delta_{n,a})) on [0, T], T defaulting to
/// the realised truncation endpoint.
BoundCertificate certify_modulus_bound(const OperatorParams& params,
                                       const ScalarFunction& f, double x,
                                       const TruncationPolicy& trunc = {},
                                       const QuadratureRule& quad = {},
                                       std::optional<double> domain_end = {},
                                       std::optional<double> grid_step = {},
                                       const CertifyOptions& opts = {});

/// |S(f;x) - f(x)|  vs  M delta^{alpha/2}; the (M, alpha) hint is verified on
/// a grid before use and a violation aborts with the witnessing pair.
BoundCertificate certify_lipschitz_bound(const OperatorParams& params,
                                         const ScalarFunction& f, double x,
                                         const TruncationPolicy& trunc = {},
                                         const QuadratureRule& quad = {},
                                         const CertifyOptions& opts = {});

/// |Y(f;x,y) - f(x,y)|  vs  4 w(f; sqrt(delta_m), sqrt(delta_m')).
BoundCertificate certify_bivariate_bound(const BivariateParams& params,
                                         const BivariateFunction& f, double x, double y,
                                         const TruncationPolicy& trunc = {},
                                         const QuadratureRule& quad = {},
                                         std::optional<Box> domain = {},
                                         std::optional<double> grid_step = {},
                                         const CertifyOptions& opts = {});

/// |Y(f;x,y) - f(x,y)|  vs  M delta^{a1/2} delta'^{a2/2}.  The product-form
/// hint |f(u,v)-f(x,y)| <= M|u-x|^{a1}|v-y|^{a2} is verified against the
/// certification point (x,y) over the whole domain grid, which is exactly
/// the set of pairs the pointwise bound consumes.
BoundCertificate certify_bivariate_lipschitz(const BivariateParams& params,
                                             const BivariateFunction& f, double x,
                                             double y, const TruncationPolicy& trunc = {},
                                             const QuadratureRule& quad = {},
                                             const CertifyOptions& opts = {});

}  // namespace szmk
