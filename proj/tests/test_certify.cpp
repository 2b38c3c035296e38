#include <cmath>
#include <numbers>

#include "doctest.h"
#include "szmk/certify.hpp"
#include "szmk/moments.hpp"
#include "szmk/operator.hpp"

using szmk::BivariateParams;
using szmk::BoundCertificate;
using szmk::CertifyOptions;
using szmk::OperatorParams;
using szmk::ScalarFunction;

namespace {

ScalarFunction exp_neg2() {
  ScalarFunction f;
  f.eval = [](double u) { return std::exp(-2.0 * u); };
  f.bound_on = [](double) { return 1.0; };
  f.lipschitz = szmk::LipschitzHint{2.0, 1.0};
  return f;
}

ScalarFunction identity_fn() {
  ScalarFunction f;
  f.eval = [](double u) { return u; };
  f.bound_on = [](double t) { return t; };
  f.lipschitz = szmk::LipschitzHint{1.0, 1.0};
  return f;
}

}  // namespace

TEST_CASE("modulus certificate on a constant passes with zero bound") {
  ScalarFunction f;
  f.eval = [](double) { return 2.5; };
  f.bound_on = [](double) { return 2.5; };
  const BoundCertificate cert = szmk::certify_modulus_bound({5, 1.5}, f, 0.7);
  CHECK(cert.bound_value == 0.0);
  CHECK(cert.actual_error <= 1e-11);
  CHECK(cert.pass);
}

TEST_CASE("modulus certificate for exp(-2x) at the worked point") {
  const BoundCertificate cert =
      szmk::certify_modulus_bound({5, 1.5}, exp_neg2(), 0.5, {}, {}, 3.0);
  CHECK(cert.pass);
  CHECK(cert.margin > 0.5);  // wide margin at n = 5
  CHECK(cert.bound_value > cert.actual_error);
}

TEST_CASE("modulus certificate margins shrink as n grows") {
  double prev_bound = 1e9;
  double prev_margin = 1e9;
  for (long long n : {5, 50, 500}) {
    const BoundCertificate cert =
        szmk::certify_modulus_bound({n, 1.5}, exp_neg2(), 0.25);
    CHECK(cert.pass);
    CHECK(cert.bound_value < prev_bound);
    CHECK(cert.margin < prev_margin);
    prev_bound = cert.bound_value;
    prev_margin = cert.margin;
  }
}

TEST_CASE("modulus certificates pass for cosine across degrees") {
  ScalarFunction f;
  f.eval = [](double u) { return std::cos(std::numbers::pi * u); };
  f.bound_on = [](double) { return 1.0; };
  f.lipschitz = szmk::LipschitzHint{std::numbers::pi, 1.0};
  for (long long n : {5, 50, 500}) {
    CHECK(szmk::certify_modulus_bound({n, 3.0}, f, 0.25).pass);
  }
}

TEST_CASE("lipschitz certificate on the identity has closed-form sides") {
  for (long long n : {5, 20, 100}) {
    for (double a : {1.5, 3.0}) {
      for (double x : {0.0, 0.4, 1.0}) {
        const BoundCertificate cert =
            szmk::certify_lipschitz_bound({n, a}, identity_fn(), x);
        const double c1 = szmk::central_moments({n, a}, x).c1;
        const double want_bound = std::sqrt(szmk::delta({n, a}, x));
        CHECK(cert.pass);
        CHECK(cert.bound_value == doctest::Approx(want_bound).epsilon(1e-12));
        CHECK(cert.actual_error == doctest::Approx(std::abs(c1)).epsilon(1e-6));
        CHECK(cert.margin >= -1e-12);
      }
    }
  }
}

TEST_CASE("lipschitz certificate on a constant with M = 0") {
  ScalarFunction f;
  f.eval = [](double) { return 1.0; };
  f.bound_on = [](double) { return 1.0; };
  f.lipschitz = szmk::LipschitzHint{0.0, 1.0};
  const BoundCertificate cert = szmk::certify_lipschitz_bound({10, 2.0}, f, 0.3);
  CHECK(cert.bound_value == 0.0);
  CHECK(cert.pass);
}

TEST_CASE("lipschitz certificate at a kink") {
  ScalarFunction f;
  f.eval = [](double u) { return std::abs(u - 0.5); };
  f.bound_on = [](double t) { return std::max(0.5, t - 0.5); };
  f.lipschitz = szmk::LipschitzHint{1.0, 1.0};
  const BoundCertificate cert = szmk::certify_lipschitz_bound({20, 1.5}, f, 0.5);
  CHECK(cert.pass);
  CHECK(cert.actual_error <= cert.bound_value);
}

TEST_CASE("violated lipschitz hints are rejected with a witness") {
  ScalarFunction f;
  f.eval = [](double u) { return u * u; };
  f.lipschitz = szmk::LipschitzHint{1.0, 1.0};
  CHECK_THROWS_WITH_AS(szmk::certify_lipschitz_bound({5, 1.5}, f, 1.5),
                       doctest::Contains("exceeds"), szmk::Error);
  try {
    szmk::certify_lipschitz_bound({5, 1.5}, f, 1.5);
  } catch (const szmk::Error& e) {
    CHECK(e.kind() == szmk::ErrorKind::LipschitzHintViolated);
  }
}

TEST_CASE("missing hint is an invalid argument") {
  ScalarFunction f{[](double u) { return u; }};
  CHECK_THROWS_AS(szmk::certify_lipschitz_bound({5, 1.5}, f, 0.5), szmk::Error);
}

TEST_CASE("negative control: halving the bound breaks the identity certificate") {
  CertifyOptions opts;
  opts.bound_scale = 0.5;
  const BoundCertificate cert =
      szmk::certify_lipschitz_bound({10, 1.5}, identity_fn(), 0.0, {}, {}, opts);
  // bound/2 = sqrt(1/(3 n^2))/2 < 1/(2n) = actual error at the origin.
  CHECK_FALSE(cert.pass);
  CHECK(cert.margin < 0.0);
}

TEST_CASE("bivariate modulus certificate on a constant") {
  szmk::BivariateFunction f;
  f.eval = [](double, double) { return 3.0; };
  f.bound_on = [](double, double) { return 3.0; };
  const BoundCertificate cert = szmk::certify_bivariate_bound({5, 3.0}, f, 0.5, 0.5);
  CHECK(cert.bound_value == 0.0);
  CHECK(cert.actual_error <= 1e-11);
  CHECK(cert.pass);
}

TEST_CASE("bivariate modulus certificate on a product function") {
  szmk::BivariateFunction f;
  f.eval = [](double u, double v) { return u * v; };
  f.bound_on = [](double tx, double ty) { return tx * ty; };
  const BoundCertificate cert = szmk::certify_bivariate_bound({10, 3.0}, f, 0.5, 0.5);
  CHECK(cert.pass);
  CHECK(cert.bound_value > cert.actual_error);
}

TEST_CASE("separable certificates are consistent with univariate error data") {
  szmk::BivariateFunction f;
  f.eval = [](double u, double v) { return std::exp(-u) * std::exp(-v); };
  f.bound_on = [](double, double) { return 1.0; };
  const BivariateParams params{8, 3.0};
  const double x = 0.4;
  const double y = 0.9;
  const double actual =
      std::abs(szmk::apply_bivariate(params, f, x, y).value - f.eval(x, y));

  ScalarFunction g;
  g.eval = [](double u) { return std::exp(-u); };
  g.bound_on = [](double) { return 1.0; };
  const double gx = szmk::apply(params.axis(), g, x).value;
  const double ex = std::abs(gx - g.eval(x));
  const double ey = std::abs(szmk::apply(params.axis(), g, y).value - g.eval(y));
  // |S(g;x)S(g;y) - g(x)g(y)| <= ex (|g(y)| + ey) + |g(x)| ey + cross slack.
  CHECK(actual <= ex * (std::abs(g.eval(y)) + ey) + std::abs(g.eval(x)) * ey + 1e-8);
}

TEST_CASE("bivariate lipschitz certificate at hypothesis-satisfying points") {
  szmk::BivariateFunction prod;
  prod.eval = [](double u, double v) { return u * v; };
  prod.bound_on = [](double tx, double ty) { return tx * ty; };
  prod.lipschitz = szmk::MixedLipschitzHint{1.0, 1.0, 1.0};
  // |uv - 0| = |u||v|: the product hint holds exactly against the origin.
  const BoundCertificate origin =
      szmk::certify_bivariate_lipschitz({5, 3.0}, prod, 0.0, 0.0);
  CHECK(origin.pass);

  // Away from the origin the product class cannot hold: u = x forces the
  // right side to zero while uv still moves with v.
  CHECK_THROWS_AS(szmk::certify_bivariate_lipschitz({5, 3.0}, prod, 0.5, 0.5),
                  szmk::Error);

  szmk::BivariateFunction kink;
  kink.eval = [](double u, double v) { return std::abs(u - 0.5) * std::abs(v - 0.5); };
  kink.bound_on = [](double tx, double ty) { return (tx + 0.5) * (ty + 0.5); };
  kink.lipschitz = szmk::MixedLipschitzHint{1.0, 1.0, 1.0};
  const BoundCertificate at_kink =
      szmk::certify_bivariate_lipschitz({10, 3.0}, kink, 0.5, 0.5);
  CHECK(at_kink.pass);

  szmk::BivariateFunction constant;
  constant.eval = [](double, double) { return 4.0; };
  constant.bound_on = [](double, double) { return 4.0; };
  constant.lipschitz = szmk::MixedLipschitzHint{0.0, 1.0, 1.0};
  CHECK(szmk::certify_bivariate_lipschitz({5, 3.0}, constant, 0.3, 0.7).pass);
}
