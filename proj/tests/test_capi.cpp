#include <cmath>
#include <cstring>
#include <string>

#include "doctest.h"
#include "szmk/moments.hpp"
#include "szmk/operator.hpp"
#include "szmklab.h"

namespace {

double call_exp(double x, void*) { return std::exp(-2.0 * x); }
double call_identity(double x, void*) { return x; }
double call_product(double x, double y, void*) { return x * y; }
int call_even(long long n, void*) { return n % 2 == 0 ? 1 : 0; }
double call_inv(long long n, void*) { return 1.0 / static_cast<double>(n); }

struct EvalHandle {
  szmk_eval* ptr = szmk_eval_new();
  ~EvalHandle() { szmk_eval_free(ptr); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(szmk_version()) == "1.0.0");
  CHECK(std::string(szmk_status_name(SZMK_OK)) == "ok");
  CHECK(std::string(szmk_status_name(SZMK_ERR_TRUNCATION)) == "truncation-failure");
}

TEST_CASE("handle configuration validates inputs") {
  EvalHandle eval;
  REQUIRE(eval.ptr != nullptr);
  CHECK(szmk_eval_set_tail_eps(eval.ptr, 1e-10) == SZMK_OK);
  CHECK(szmk_eval_set_tail_eps(eval.ptr, -1.0) == SZMK_ERR_INVALID_ARGUMENT);
  CHECK(std::string(szmk_last_error()).size() > 0);
  CHECK(szmk_eval_set_quad_points(eval.ptr, 5) == SZMK_OK);
  CHECK(szmk_eval_set_quad_points(eval.ptr, 0) == SZMK_ERR_INVALID_ARGUMENT);
  CHECK(szmk_eval_set_hard_cap(eval.ptr, 100000) == SZMK_OK);
}

TEST_CASE("weight, mean and moments round-trip through the C surface") {
  double w = -1.0;
  REQUIRE(szmk_weight(5, 1.5, 0, 1.0, &w) == SZMK_OK);
  CHECK(w == doctest::Approx(szmk::weight({5, 1.5}, 0, 1.0)).epsilon(1e-15));

  double lambda = 0.0;
  REQUIRE(szmk_mean_parameter(5, 1.5, 1.0, &lambda) == SZMK_OK);
  CHECK(lambda == doctest::Approx(4.80000717824668).epsilon(1e-13));

  double raw[4];
  double central[4];
  REQUIRE(szmk_raw_moments(3, 2.0, 0.7, raw) == SZMK_OK);
  REQUIRE(szmk_central_moments(3, 2.0, 0.7, central) == SZMK_OK);
  const szmk::MomentVector m = szmk::raw_moments({3, 2.0}, 0.7);
  CHECK(raw[0] == m.m0);
  CHECK(raw[1] == m.m1);
  CHECK(raw[2] == m.m2);
  CHECK(raw[3] == m.m3);
  double d = 0.0;
  REQUIRE(szmk_delta(3, 2.0, 0.7, &d) == SZMK_OK);
  CHECK(d == central[1]);

  double biv[8];
  REQUIRE(szmk_bivariate_moments(4, 2.0, 0.3, 0.8, biv) == SZMK_OK);
  CHECK(biv[0] == 1.0);
  CHECK(biv[6] >= 0.0);

  CHECK(szmk_mean_parameter(0, 1.5, 1.0, &lambda) == SZMK_ERR_INVALID_ARGUMENT);
  CHECK(szmk_mean_parameter(5, 0.9, 1.0, &lambda) == SZMK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("apply through callbacks matches the native path") {
  EvalHandle eval;
  szmk_apply_info info;
  REQUIRE(szmk_apply(eval.ptr, 5, 1.5, call_exp, nullptr, 0.5, &info) == SZMK_OK);
  const double native =
      szmk::apply({5, 1.5}, szmk::ScalarFunction{[](double u) { return std::exp(-2.0 * u); }},
                  0.5)
          .value;
  CHECK(info.value == doctest::Approx(native).epsilon(1e-15));
  CHECK(info.tail_mass <= 1e-12);
  CHECK(info.y_end == 0.0);

  REQUIRE(szmk_apply_kantorovich(eval.ptr, 10, call_identity, nullptr, 0.5, &info) ==
          SZMK_OK);
  CHECK(info.value == doctest::Approx(0.55).epsilon(1e-10));

  REQUIRE(szmk_apply_bivariate(eval.ptr, 5, 3.0, call_product, nullptr, 0.6, 1.1,
                               &info) == SZMK_OK);
  CHECK(info.y_end > 0.0);
}

TEST_CASE("truncation failures surface as status codes with messages") {
  EvalHandle eval;
  REQUIRE(szmk_eval_set_hard_cap(eval.ptr, 3) == SZMK_OK);
  szmk_apply_info info;
  CHECK(szmk_apply(eval.ptr, 5, 1.5, call_identity, nullptr, 2.0, &info) ==
        SZMK_ERR_TRUNCATION);
  CHECK(std::string(szmk_last_error()).find("cap") != std::string::npos);
}

TEST_CASE("density helpers") {
  long long count = 0;
  double density = 0.0;
  REQUIRE(szmk_natural_density(call_even, nullptr, 1000, &count, &density) == SZMK_OK);
  CHECK(count == 500);
  CHECK(density == 0.5);

  long long horizons[64];
  long long counts[64];
  int length = 0;
  REQUIRE(szmk_density_trace(call_even, nullptr, 1024, horizons, counts, 64, &length) ==
          SZMK_OK);
  REQUIRE(length > 4);
  CHECK(horizons[length - 1] == 1024);
  CHECK(counts[length - 1] == 512);

  int consistent = 0;
  const double eps[] = {0.01};
  REQUIRE(szmk_stat_limit_check(call_inv, nullptr, 0.0, eps, 1, 10000, 0.02,
                                &consistent) == SZMK_OK);
  CHECK(consistent == 1);

  CHECK(szmk_counterexample_term(9) == 3.0);
  CHECK(szmk_counterexample_term(10) == 0.0);

  const long long marks[] = {1000, 10000};
  double scaled[2];
  REQUIRE(szmk_stat_degree_trace(call_inv, nullptr, 0.0, 0.5, 0.01, marks, 2, scaled) ==
          SZMK_OK);
  CHECK(scaled[1] == doctest::Approx(100.0 / 100.0).epsilon(1e-12));

  double dev[3];
  double tails[2];
  REQUIRE(szmk_korovkin_row(10, 1.5, 1.0, 0.01, 0, 100.0, dev, tails) == SZMK_OK);
  CHECK(dev[0] == 0.0);
  CHECK(dev[1] > 0.0);
}

TEST_CASE("modulus and certificates through the C surface") {
  double value = 0.0;
  REQUIRE(szmk_modulus(call_identity, nullptr, 0.3, 1.0, 0.01, &value) == SZMK_OK);
  CHECK(value == doctest::Approx(0.3).epsilon(1e-12));

  REQUIRE(szmk_modulus_bivariate(call_product, nullptr, 0.2, 0.2, 1.0, 1.0, 0.05,
                                 &value) == SZMK_OK);
  CHECK(value > 0.0);

  EvalHandle eval;
  szmk_certificate cert;
  REQUIRE(szmk_certify_modulus(eval.ptr, 5, 1.5, call_exp, nullptr, 2.0, 1.0, 0.5, 1.0,
                               &cert) == SZMK_OK);
  CHECK(cert.pass == 1);
  CHECK(cert.kind == 0);

  REQUIRE(szmk_certify_lipschitz(eval.ptr, 10, 1.5, call_identity, nullptr, 1.0, 1.0,
                                 0.0, 1.0, &cert) == SZMK_OK);
  CHECK(cert.pass == 1);
  REQUIRE(szmk_certify_lipschitz(eval.ptr, 10, 1.5, call_identity, nullptr, 1.0, 1.0,
                                 0.0, 0.5, &cert) == SZMK_OK);
  CHECK(cert.pass == 0);  // halved bound breaks the certificate at the origin

  REQUIRE(szmk_certify_bivariate(eval.ptr, 5, 3.0, call_product, nullptr, 0.5, 0.5, 1.0,
                                 &cert) == SZMK_OK);
  CHECK(cert.pass == 1);
  CHECK(cert.kind == 2);

  REQUIRE(szmk_certify_bivariate_lipschitz(eval.ptr, 5, 3.0, call_product, nullptr, 1.0,
                                           1.0, 1.0, 0.0, 0.0, 1.0, &cert) == SZMK_OK);
  CHECK(cert.pass == 1);
  CHECK(szmk_certify_bivariate_lipschitz(eval.ptr, 5, 3.0, call_product, nullptr, 1.0,
                                         1.0, 1.0, 0.5, 0.5, 1.0,
                                         &cert) == SZMK_ERR_LIPSCHITZ);

  CHECK(szmk_certify_modulus(nullptr, 5, 1.5, call_exp, nullptr, 2.0, 1.0, 0.5, 1.0,
                             &cert) == SZMK_ERR_INVALID_ARGUMENT);
}
