#include "szmklab.h"

#include <algorithm>
#include <cstring>
#include <string>
#include <vector>

#include "szmk/certify.hpp"
#include "szmk/density.hpp"
#include "szmk/moments.hpp"
#include "szmk/modulus.hpp"
#include "szmk/operator.hpp"

namespace {

thread_local std::string g_last_error;

szmk_status map_kind(szmk::ErrorKind kind) {
  switch (kind) {
    case szmk::ErrorKind::InvalidArgument:
      return SZMK_ERR_INVALID_ARGUMENT;
    case szmk::ErrorKind::TruncationFailure:
      return SZMK_ERR_TRUNCATION;
    case szmk::ErrorKind::NonFiniteFunction:
      return SZMK_ERR_NONFINITE;
    case szmk::ErrorKind::LipschitzHintViolated:
      return SZMK_ERR_LIPSCHITZ;
    case szmk::ErrorKind::DegenerateGrid:
      return SZMK_ERR_GRID;
  }
  return SZMK_ERR_INTERNAL;
}

template <typename Fn>
szmk_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SZMK_OK;
  } catch (const szmk::Error& e) {
    g_last_error = e.what();
    return map_kind(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SZMK_ERR_INTERNAL;
  }
}

szmk::ScalarFunction wrap1(szmk_fn1 f, void* ctx, double lip_m, double lip_alpha) {
  szmk::ScalarFunction out;
  out.eval = [f, ctx](double x) { return f(x, ctx); };
  if (lip_m >= 0.0) out.lipschitz = szmk::LipschitzHint{lip_m, lip_alpha};
  return out;
}

szmk::BivariateFunction wrap2(szmk_fn2 f, void* ctx) {
  szmk::BivariateFunction out;
  out.eval = [f, ctx](double x, double y) { return f(x, y, ctx); };
  return out;
}

void fill_info(const szmk::EvalResult& r, szmk_apply_info* out) {
  out->value = r.value;
  out->tail_mass = r.tail_mass;
  out->x_end = r.t_end;
  out->y_end = 0.0;
}

void fill_cert(const szmk::BoundCertificate& c, szmk_certificate* out) {
  out->kind = static_cast<int>(c.kind);
  out->x = c.x;
  out->y = c.y;
  out->actual_error = c.actual_error;
  out->bound_value = c.bound_value;
  out->margin = c.margin;
  out->slack = c.slack;
  out->pass = c.pass ? 1 : 0;
}

szmk_status require(bool ok, const char* message) {
  if (ok) return SZMK_OK;
  g_last_error = message;
  return SZMK_ERR_INVALID_ARGUMENT;
}

}  // namespace

struct szmk_eval {
  szmk::TruncationPolicy trunc;
  szmk::QuadratureRule quad;
};

extern "C" {

const char* szmk_version(void) { return "1.0.0"; }

const char* szmk_status_name(szmk_status status) {
  switch (status) {
    case SZMK_OK:
      return "ok";
    case SZMK_ERR_INVALID_ARGUMENT:
      return "invalid-argument";
    case SZMK_ERR_TRUNCATION:
      return "truncation-failure";
    case SZMK_ERR_NONFINITE:
      return "non-finite-function";
    case SZMK_ERR_LIPSCHITZ:
      return "lipschitz-hint-violated";
    case SZMK_ERR_GRID:
      return "degenerate-grid";
    case SZMK_ERR_INTERNAL:
      return "internal-error";
  }
  return "unknown";
}

const char* szmk_last_error(void) { return g_last_error.c_str(); }

szmk_eval* szmk_eval_new(void) { return new (std::nothrow) szmk_eval(); }

void szmk_eval_free(szmk_eval* eval) { delete eval; }

szmk_status szmk_eval_set_tail_eps(szmk_eval* eval, double tail_mass_epsilon) {
  if (auto s = require(eval != nullptr, "null eval handle")) return s;
  return guarded([&] {
    szmk::TruncationPolicy probe = eval->trunc;
    probe.tail_mass_epsilon = tail_mass_epsilon;
    probe.validate();
    eval->trunc = probe;
  });
}

szmk_status szmk_eval_set_hard_cap(szmk_eval* eval, long long hard_k_cap) {
  if (auto s = require(eval != nullptr, "null eval handle")) return s;
  return guarded([&] {
    szmk::TruncationPolicy probe = eval->trunc;
    probe.hard_k_cap = hard_k_cap < 0 ? 0 : hard_k_cap;
    probe.validate();
    eval->trunc = probe;
  });
}

szmk_status szmk_eval_set_quad_points(szmk_eval* eval, int points_per_cell) {
  if (auto s = require(eval != nullptr, "null eval handle")) return s;
  return guarded([&] {
    szmk::QuadratureRule probe{points_per_cell};
    probe.validate();
    eval->quad = probe;
  });
}

szmk_status szmk_weight(long long n, double a, long long k, double x, double* out) {
  if (auto s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] { *out = szmk::weight({n, a}, k, x); });
}

szmk_status szmk_mean_parameter(long long n, double a, double x, double* out) {
  if (auto s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] { *out = szmk::mean_parameter({n, a}, x); });
}

szmk_status szmk_apply(szmk_eval* eval, long long n, double a, szmk_fn1 f, void* ctx,
                       double x, szmk_apply_info* out) {
  if (auto s = require(eval && f && out, "null argument")) return s;
  return guarded([&] {
    fill_info(szmk::apply({n, a}, wrap1(f, ctx, -1.0, 1.0), x, eval->trunc, eval->quad),
              out);
  });
}

szmk_status szmk_apply_kantorovich(szmk_eval* eval, long long n, szmk_fn1 f, void* ctx,
                                   double x, szmk_apply_info* out) {
  if (auto s = require(eval && f && out, "null argument")) return s;
  return guarded([&] {
    fill_info(
        szmk::apply_kantorovich(n, wrap1(f, ctx, -1.0, 1.0), x, eval->trunc, eval->quad),
        out);
  });
}

szmk_status szmk_apply_bivariate(szmk_eval* eval, long long m, double a, szmk_fn2 f,
                                 void* ctx, double x, double y, szmk_apply_info* out) {
  if (auto s = require(eval && f && out, "null argument")) return s;
  return guarded([&] {
    const szmk::BivariateEvalResult r =
        szmk::apply_bivariate({m, a}, wrap2(f, ctx), x, y, eval->trunc, eval->quad);
    out->value = r.value;
    out->tail_mass = r.tail_mass;
    out->x_end = r.x_end;
    out->y_end = r.y_end;
  });
}

szmk_status szmk_raw_moments(long long n, double a, double x, double out[4]) {
  if (auto s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    const szmk::MomentVector m = szmk::raw_moments({n, a}, x);
    out[0] = m.m0;
    out[1] = m.m1;
    out[2] = m.m2;
    out[3] = m.m3;
  });
}

szmk_status szmk_central_moments(long long n, double a, double x, double out[4]) {
  if (auto s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    const szmk::CentralMomentVector c = szmk::central_moments({n, a}, x);
    out[0] = c.c1;
    out[1] = c.c2;
    out[2] = c.c3;
    out[3] = c.c4;
  });
}

szmk_status szmk_delta(long long n, double a, double x, double* out) {
  if (auto s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] { *out = szmk::delta({n, a}, x); });
}

szmk_status szmk_bivariate_moments(long long m, double a, double x, double y,
                                   double out[8]) {
  if (auto s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    const szmk::BivariateMomentTable t = szmk::bivariate_moments({m, a}, x, y);
    out[0] = t.y00;
    out[1] = t.y11;
    out[2] = t.y22;
    out[3] = t.y33;
    out[4] = t.cx1;
    out[5] = t.cy1;
    out[6] = t.cx2;
    out[7] = t.cy2;
  });
}

szmk_status szmk_natural_density(szmk_pred member, void* ctx, long long horizon,
                                 long long* count, double* density) {
  if (auto s = require(member && count && density, "null argument")) return s;
  return guarded([&] {
    const szmk::DensityReport r = szmk::natural_density(
        [member, ctx](long long n) { return member(n, ctx) != 0; }, horizon);
    *count = r.exceedance_count;
    *density = r.density;
  });
}

szmk_status szmk_density_trace(szmk_pred member, void* ctx, long long horizon,
                               long long* horizons, long long* counts, int capacity,
                               int* length) {
  if (auto s = require(member && horizons && counts && length, "null argument")) return s;
  return guarded([&] {
    const szmk::DensityReport r = szmk::natural_density(
        [member, ctx](long long n) { return member(n, ctx) != 0; }, horizon);
    if (static_cast<int>(r.trace.size()) > capacity) {
      szmk::fail(szmk::ErrorKind::InvalidArgument, "trace capacity too small");
    }
    *length = static_cast<int>(r.trace.size());
    for (int i = 0; i < *length; ++i) {
      horizons[i] = r.trace[static_cast<std::size_t>(i)].first;
      const double d = r.trace[static_cast<std::size_t>(i)].second;
      counts[i] = static_cast<long long>(d * static_cast<double>(horizons[i]) + 0.5);
    }
  });
}

szmk_status szmk_stat_limit_check(szmk_seq sequence, void* ctx, double limit,
                                  const double* epsilons, int n_epsilons,
                                  long long horizon, double verdict_threshold,
                                  int* consistent) {
  if (auto s = require(sequence && epsilons && consistent && n_epsilons > 0,
                       "null argument")) {
    return s;
  }
  return guarded([&] {
    const std::vector<double> eps(epsilons, epsilons + n_epsilons);
    const szmk::StatLimitVerdict v = szmk::stat_limit_check(
        [sequence, ctx](long long n) { return sequence(n, ctx); }, limit, eps, horizon,
        verdict_threshold);
    *consistent = v.consistent ? 1 : 0;
  });
}

double szmk_counterexample_term(long long n) {
  return n >= 1 ? szmk::counterexample_term(n) : 0.0;
}

szmk_status szmk_stat_degree_trace(szmk_seq sequence, void* ctx, double limit,
                                   double beta, double epsilon, const long long* horizons,
                                   int n_horizons, double* scaled) {
  if (auto s = require(sequence && horizons && scaled && n_horizons > 0,
                       "null argument")) {
    return s;
  }
  return guarded([&] {
    std::vector<long long> marks(horizons, horizons + n_horizons);
    std::sort(marks.begin(), marks.end());
    const double eps[] = {epsilon};
    const std::vector<szmk::DegreeTrace> traces = szmk::stat_degree_check(
        [sequence, ctx](long long n) { return sequence(n, ctx); }, limit, beta, eps,
        marks.back(), marks);
    for (int i = 0; i < n_horizons; ++i) {
      scaled[i] = traces.front().scaled[static_cast<std::size_t>(i)].second;
    }
  });
}

szmk_status szmk_korovkin_row(long long n, double a, double l, double grid_step,
                              int weighted, double x_max, double dev[3],
                              double tail_bounds[2]) {
  if (auto s = require(dev != nullptr, "null output pointer")) return s;
  return guarded([&] {
    const szmk::OperatorParams params{n, a};
    const std::vector<szmk::KorovkinDeviationRow> rows = szmk::korovkin_deviations(
        std::span<const szmk::OperatorParams>(&params, 1), l, grid_step, weighted != 0,
        x_max);
    dev[0] = rows.front().dev_e0;
    dev[1] = rows.front().dev_e1;
    dev[2] = rows.front().dev_e2;
    if (tail_bounds != nullptr) {
      tail_bounds[0] = rows.front().tail_bound_e1.value_or(0.0);
      tail_bounds[1] = rows.front().tail_bound_e2.value_or(0.0);
    }
  });
}

szmk_status szmk_modulus(szmk_fn1 f, void* ctx, double delta, double domain_end,
                         double grid_step, double* value) {
  if (auto s = require(f && value, "null argument")) return s;
  return guarded([&] {
    *value = szmk::modulus(wrap1(f, ctx, -1.0, 1.0), delta, domain_end, grid_step).value;
  });
}

szmk_status szmk_modulus_bivariate(szmk_fn2 f, void* ctx, double delta_x, double delta_y,
                                   double x_end, double y_end, double grid_step,
                                   double* value) {
  if (auto s = require(f && value, "null argument")) return s;
  return guarded([&] {
    *value = szmk::modulus_bivariate(wrap2(f, ctx), delta_x, delta_y,
                                     szmk::Box{x_end, y_end}, grid_step, grid_step)
                 .value;
  });
}

szmk_status szmk_certify_modulus(szmk_eval* eval, long long n, double a, szmk_fn1 f,
                                 void* ctx, double lip_m, double lip_alpha, double x,
                                 double bound_scale, szmk_certificate* out) {
  if (auto s = require(eval && f && out, "null argument")) return s;
  return guarded([&] {
    szmk::CertifyOptions opts;
    opts.bound_scale = bound_scale;
    fill_cert(szmk::certify_modulus_bound({n, a}, wrap1(f, ctx, lip_m, lip_alpha), x,
                                          eval->trunc, eval->quad, {}, {}, opts),
              out);
  });
}

szmk_status szmk_certify_lipschitz(szmk_eval* eval, long long n, double a, szmk_fn1 f,
                                   void* ctx, double lip_m, double lip_alpha, double x,
                                   double bound_scale, szmk_certificate* out) {
  if (auto s = require(eval && f && out, "null argument")) return s;
  return guarded([&] {
    szmk::CertifyOptions opts;
    opts.bound_scale = bound_scale;
    fill_cert(szmk::certify_lipschitz_bound({n, a}, wrap1(f, ctx, lip_m, lip_alpha), x,
                                            eval->trunc, eval->quad, opts),
              out);
  });
}

szmk_status szmk_certify_bivariate(szmk_eval* eval, long long m, double a, szmk_fn2 f,
                                   void* ctx, double x, double y, double bound_scale,
                                   szmk_certificate* out) {
  if (auto s = require(eval && f && out, "null argument")) return s;
  return guarded([&] {
    szmk::CertifyOptions opts;
    opts.bound_scale = bound_scale;
    fill_cert(szmk::certify_bivariate_bound({m, a}, wrap2(f, ctx), x, y, eval->trunc,
                                            eval->quad, {}, {}, opts),
              out);
  });
}

szmk_status szmk_certify_bivariate_lipschitz(szmk_eval* eval, long long m, double a,
                                             szmk_fn2 f, void* ctx, double lip_m,
                                             double alpha_x, double alpha_y, double x,
                                             double y, double bound_scale,
                                             szmk_certificate* out) {
  if (auto s = require(eval && f && out, "null argument")) return s;
  return guarded([&] {
    szmk::BivariateFunction fn = wrap2(f, ctx);
    fn.lipschitz = szmk::MixedLipschitzHint{lip_m, alpha_x, alpha_y};
    szmk::CertifyOptions opts;
    opts.bound_scale = bound_scale;
    fill_cert(szmk::certify_bivariate_lipschitz({m, a}, fn, x, y, eval->trunc, eval->quad,
                                                opts),
              out);
  });
}

}  // extern "C"
