/* szmklab - summation-integral operator laboratory.
 *
 * C interface to the szmklab shared library.  All functions return a
 * szmk_status; outputs are written through pointers only on SZMK_OK.  On
 * failure szmk_last_error() holds a thread-local diagnostic message.
 */
#ifndef SZMKLAB_H
#define SZMKLAB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum szmk_status {
  SZMK_OK = 0,
  SZMK_ERR_INVALID_ARGUMENT = 1,
  SZMK_ERR_TRUNCATION = 2,
  SZMK_ERR_NONFINITE = 3,
  SZMK_ERR_LIPSCHITZ = 4,
  SZMK_ERR_GRID = 5,
  SZMK_ERR_INTERNAL = 6
} szmk_status;

const char* szmk_version(void);
const char* szmk_status_name(szmk_status status);
const char* szmk_last_error(void);

/* Evaluation context: series truncation plus per-cell quadrature settings.
 * Defaults: tail mass 1e-12, automatic series cap, 5 Gauss-Legendre nodes. */
typedef struct szmk_eval szmk_eval;

szmk_eval* szmk_eval_new(void);
void szmk_eval_free(szmk_eval* eval);
szmk_status szmk_eval_set_tail_eps(szmk_eval* eval, double tail_mass_epsilon);
szmk_status szmk_eval_set_hard_cap(szmk_eval* eval, long long hard_k_cap);
szmk_status szmk_eval_set_quad_points(szmk_eval* eval, int points_per_cell);

/* Caller-supplied function and sequence callbacks. */
typedef double (*szmk_fn1)(double x, void* ctx);
typedef double (*szmk_fn2)(double x, double y, void* ctx);
typedef int (*szmk_pred)(long long index, void* ctx);
typedef double (*szmk_seq)(long long index, void* ctx);

/* Series weight s_{n,k}^a(x) and its Poisson mean x log(a)/(a^{1/n}-1). */
szmk_status szmk_weight(long long n, double a, long long k, double x, double* out);
szmk_status szmk_mean_parameter(long long n, double a, double x, double* out);

typedef struct szmk_apply_info {
  double value;
  double tail_mass; /* weight mass left un-summed */
  double x_end;     /* end of the touched cell range, first axis */
  double y_end;     /* second axis; 0 for univariate evaluations */
} szmk_apply_info;

szmk_status szmk_apply(szmk_eval* eval, long long n, double a, szmk_fn1 f, void* ctx,
                       double x, szmk_apply_info* out);
szmk_status szmk_apply_kantorovich(szmk_eval* eval, long long n, szmk_fn1 f, void* ctx,
                                   double x, szmk_apply_info* out);
szmk_status szmk_apply_bivariate(szmk_eval* eval, long long m, double a, szmk_fn2 f,
                                 void* ctx, double x, double y, szmk_apply_info* out);

/* Closed-form moments.  raw = operator on 1, u, u^2, u^3; central = operator
 * on (u-x)^i, i = 1..4; bivariate order: y00, y11, y22, y33, cx1, cy1, cx2,
 * cy2.  szmk_delta is the second central moment. */
szmk_status szmk_raw_moments(long long n, double a, double x, double out[4]);
szmk_status szmk_central_moments(long long n, double a, double x, double out[4]);
szmk_status szmk_delta(long long n, double a, double x, double* out);
szmk_status szmk_bivariate_moments(long long m, double a, double x, double y,
                                   double out[8]);

/* Natural-density machinery.  Traces run over the horizons ceil(N/2^j) in
 * ascending order; capacity must cover them (64 is always enough). */
szmk_status szmk_natural_density(szmk_pred member, void* ctx, long long horizon,
                                 long long* count, double* density);
szmk_status szmk_density_trace(szmk_pred member, void* ctx, long long horizon,
                               long long* horizons, long long* counts, int capacity,
                               int* length);
szmk_status szmk_stat_limit_check(szmk_seq sequence, void* ctx, double limit,
                                  const double* epsilons, int n_epsilons,
                                  long long horizon, double verdict_threshold,
                                  int* consistent);
double szmk_counterexample_term(long long n);
szmk_status szmk_stat_degree_trace(szmk_seq sequence, void* ctx, double limit,
                                   double beta, double epsilon,
                                   const long long* horizons, int n_horizons,
                                   double* scaled);

/* One Korovkin deviation row from the closed-form moments.  dev holds the
 * grid sups for e0, e1, e2; in weighted mode tail_bounds (when non-NULL)
 * receives analytic bounds on the sup contribution beyond x_max. */
szmk_status szmk_korovkin_row(long long n, double a, double l, double grid_step,
                              int weighted, double x_max, double dev[3],
                              double tail_bounds[2]);

/* Grid modulus of continuity estimates. */
szmk_status szmk_modulus(szmk_fn1 f, void* ctx, double delta, double domain_end,
                         double grid_step, double* value);
szmk_status szmk_modulus_bivariate(szmk_fn2 f, void* ctx, double delta_x, double delta_y,
                                   double x_end, double y_end, double grid_step,
                                   double* value);

typedef struct szmk_certificate {
  int kind; /* 0 modulus, 1 lipschitz, 2 bivariate modulus, 3 bivariate lipschitz */
  double x;
  double y;
  double actual_error;
  double bound_value;
  double margin;
  double slack;
  int pass;
} szmk_certificate;

/* Pass lip_m < 0 when no Lipschitz hint is known; the hint sharpens the
 * modulus certificate's slack and is mandatory for the Lipschitz kinds. */
szmk_status szmk_certify_modulus(szmk_eval* eval, long long n, double a, szmk_fn1 f,
                                 void* ctx, double lip_m, double lip_alpha, double x,
                                 double bound_scale, szmk_certificate* out);
szmk_status szmk_certify_lipschitz(szmk_eval* eval, long long n, double a, szmk_fn1 f,
                                   void* ctx, double lip_m, double lip_alpha, double x,
                                   double bound_scale, szmk_certificate* out);
szmk_status szmk_certify_bivariate(szmk_eval* eval, long long m, double a, szmk_fn2 f,
                                   void* ctx, double x, double y, double bound_scale,
                                   szmk_certificate* out);
szmk_status szmk_certify_bivariate_lipschitz(szmk_eval* eval, long long m, double a,
                                             szmk_fn2 f, void* ctx, double lip_m,
                                             double alpha_x, double alpha_y, double x,
                                             double y, double bound_scale,
                                             szmk_certificate* out);

#ifdef __cplusplus
}
#endif

#endif /* SZMKLAB_H */
