#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "szmk/operator.hpp"
#include "szmk/stable.hpp"

using szmk::BivariateParams;
using szmk::OperatorParams;
using szmk::ScalarFunction;
using szmk::TruncationPolicy;

namespace {

const ScalarFunction kOne{[](double) { return 1.0; }};
const ScalarFunction kIdentity{[](double u) { return u; }};

}  // namespace

TEST_CASE("weight at the origin collapses to the zero term") {
  for (long long n : {1, 5, 100}) {
    CHECK(szmk::weight({n, 2.5}, 0, 0.0) == 1.0);
    CHECK(szmk::weight({n, 2.5}, 1, 0.0) == 0.0);
    CHECK(szmk::weight({n, 2.5}, 7, 0.0) == 0.0);
  }
}

TEST_CASE("weight k=0 equals exp(-lambda)") {
  const double got = szmk::weight({5, 1.5}, 0, 1.0);
  // exp(-log(1.5)/(1.5^{1/5}-1)), frozen from a 40-digit evaluation.
  CHECK(got == doctest::Approx(0.008229687974077635939).epsilon(1e-13));
}

TEST_CASE("weight family is a probability mass") {
  // Ascending partial sums never exceed 1 and reach 1 within the tail bound.
  for (auto [n, a, x] : {std::tuple{3LL, 2.0, 0.7}, {5LL, 1.5, 1.0}, {20LL, 3.0, 2.0}}) {
    const OperatorParams params{n, a};
    szmk::stable::KahanSum mass;
    const double lambda = szmk::mean_parameter(params, x);
    for (long long k = 0; k <= oracle::term_count(lambda); ++k) {
      const double w = szmk::weight(params, k, x);
      CHECK(w >= 0.0);
      mass.add(w);
      CHECK(mass.value() <= 1.0 + 1e-12);
    }
    CHECK(mass.value() >= 1.0 - 1e-12);
  }
}

TEST_CASE("weight stays finite in log space for extreme k") {
  CHECK(szmk::weight({5, 1.5}, 500000, 2.0) >= 0.0);
  CHECK(std::isfinite(szmk::weight({1000, 1.5}, 1000000, 2.0)));
}

TEST_CASE("apply on the constant returns the summed mass") {
  for (auto [n, a, x] : {std::tuple{5LL, 1.5, 0.3}, {20LL, 3.0, 1.7}, {1LL, 1.1, 0.0}}) {
    const szmk::EvalResult r = szmk::apply({n, a}, kOne, x);
    CHECK(std::abs(r.value - 1.0) <= 1e-12);
    CHECK(r.tail_mass <= 1e-12);
  }
}

TEST_CASE("apply on the identity matches the first-moment closed form") {
  // 1/10 + lambda(5,1.5;1)/5, frozen from a 40-digit evaluation.
  const szmk::EvalResult r = szmk::apply({5, 1.5}, kIdentity, 1.0);
  CHECK(r.value == doctest::Approx(1.060001435649335721562).epsilon(1e-10));
}

TEST_CASE("apply carries an error budget when a bound hint is present") {
  ScalarFunction f;
  f.eval = [](double u) { return std::exp(-u); };
  f.bound_on = [](double) { return 1.0; };
  const szmk::EvalResult r = szmk::apply({5, 1.5}, f, 1.0);
  REQUIRE(r.error_budget.has_value());
  CHECK(*r.error_budget <= 1e-12);
  CHECK(r.t_end == doctest::Approx((r.k_hi + 1) / 5.0));
}

TEST_CASE("kantorovich closed forms") {
  const szmk::EvalResult e0 = szmk::apply_kantorovich(7, kOne, 0.9);
  CHECK(std::abs(e0.value - 1.0) <= 1e-12);

  // K_n(t; x) = x + 1/(2n) from the Poisson mean.
  const szmk::EvalResult e1 = szmk::apply_kantorovich(10, kIdentity, 0.5);
  CHECK(e1.value == doctest::Approx(0.55).epsilon(1e-10));
  CHECK(e1.value == doctest::Approx(oracle::kantorovich_moment(10, 0.5, 1)).epsilon(1e-10));

  // At x = 0 only the first cell survives: 4 * integral_0^{1/4} du/(1+u).
  ScalarFunction recip{[](double u) { return 1.0 / (1.0 + u); }};
  const szmk::EvalResult at0 = szmk::apply_kantorovich(4, recip, 0.0);
  CHECK(at0.value == doctest::Approx(4.0 * std::log(1.25)).epsilon(1e-12));
}

TEST_CASE("operator degenerates to kantorovich as the base approaches 1") {
  ScalarFunction f{[](double u) { return std::cos(3.14159265358979323846 * u); }};
  const double s = szmk::apply({20, 1.0 + 1e-9}, f, 0.3).value;
  const double k = szmk::apply_kantorovich(20, f, 0.3).value;
  CHECK(std::abs(s - k) <= 1e-6 * (1.0 + std::abs(k)));
}

TEST_CASE("linearity within 1e-10 relative") {
  std::mt19937_64 rng(20260809);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::uniform_real_distribution<double> point(0.0, 2.0);
  const ScalarFunction f{[](double u) { return std::exp(-u) + u * u; }};
  const ScalarFunction g{[](double u) { return std::sin(2.0 * u); }};
  for (int trial = 0; trial < 50; ++trial) {
    const double alpha = coeff(rng);
    const double beta = coeff(rng);
    const double x = point(rng);
    const OperatorParams params{1 + static_cast<long long>(trial % 40), 1.5};
    const ScalarFunction mix{
        [&, alpha, beta](double u) { return alpha * f.eval(u) + beta * g.eval(u); }};
    const double lhs = szmk::apply(params, mix, x).value;
    const double rhs = alpha * szmk::apply(params, f, x).value +
                       beta * szmk::apply(params, g, x).value;
    CHECK(std::abs(lhs - rhs) <=
          1e-10 * std::max({1.0, std::abs(lhs), std::abs(rhs)}));
  }
}

TEST_CASE("monotonicity and positivity") {
  const ScalarFunction f{[](double u) { return std::abs(std::sin(3.0 * u)); }};
  const ScalarFunction g{[](double u) { return std::abs(std::sin(3.0 * u)) + 0.25 * u; }};
  for (double x : {0.0, 0.4, 1.3}) {
    const OperatorParams params{9, 2.0};
    const double fv = szmk::apply(params, f, x).value;
    const double gv = szmk::apply(params, g, x).value;
    CHECK(fv >= -1e-12);
    CHECK(fv <= gv + 1e-12);
  }
}

TEST_CASE("truncation failure names the cap") {
  TruncationPolicy tight;
  tight.hard_k_cap = 3;
  CHECK_THROWS_WITH_AS(szmk::apply({5, 1.5}, kOne, 2.0, tight),
                       doctest::Contains("cap 3"), szmk::Error);
}

TEST_CASE("non-finite function values abort with the node named") {
  const ScalarFunction bad{[](double u) { return u > 0.35 ? std::nan("") : u; }};
  try {
    szmk::apply({5, 1.5}, bad, 1.0);
    FAIL("expected an error");
  } catch (const szmk::Error& e) {
    CHECK(e.kind() == szmk::ErrorKind::NonFiniteFunction);
    CHECK(std::string(e.what()).find("node") != std::string::npos);
  }
}

TEST_CASE("bivariate evaluation factors on separable functions") {
  const BivariateParams params{5, 3.0};
  szmk::BivariateFunction prod{[](double u, double v) { return u * v; }};
  const double biv = szmk::apply_bivariate(params, prod, 0.6, 1.1).value;
  const double uni =
      szmk::apply({5, 3.0}, kIdentity, 0.6).value * szmk::apply({5, 3.0}, kIdentity, 1.1).value;
  CHECK(std::abs(biv - uni) <= 1e-9 * std::max(1.0, std::abs(uni)));

  szmk::BivariateFunction ones{[](double, double) { return 1.0; }};
  CHECK(std::abs(szmk::apply_bivariate(params, ones, 0.3, 0.9).value - 1.0) <= 1e-12);
}

TEST_CASE("bivariate value at the origin is the corner-cell average") {
  const BivariateParams params{5, 3.0};
  szmk::BivariateFunction f{[](double u, double v) { return std::exp(u - v) + u * v; }};
  const double got = szmk::apply_bivariate(params, f, 0.0, 0.0).value;
  // m^2 * double integral over [0,1/m]^2, via composite Simpson.
  const double inner = oracle::simpson(
      [&](double u) {
        return oracle::simpson([&](double v) { return f.eval(u, v); }, 0.0, 0.2, 200);
      },
      0.0, 0.2, 200);
  CHECK(got == doctest::Approx(25.0 * inner).epsilon(1e-10));
}
