#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace szmk {

enum class ErrorKind {
  InvalidArgument,
  TruncationFailure,
  NonFiniteFunction,
  LipschitzHintViolated,
  DegenerateGrid,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

/// Degree n and base a > 1 identifying one operator of the family.
struct OperatorParams {
  long long n = 1;
  double a = 1.5;

  void validate() const;
};

/// Shared degree m for both axes of the bivariate operator.
struct BivariateParams {
  long long m = 1;
  double a = 3.0;

  void validate() const;
  OperatorParams axis() const { return OperatorParams{m, a}; }
};

/// Series cutoff control. The weights form a probability mass, so the
/// un-summed mass is a rigorous tail bound for bounded integrands.
struct TruncationPolicy {
  double tail_mass_epsilon = 1e-12;
  long long hard_k_cap = 0;  // 0: derive from the mean, 10*ceil(lambda)+200

  void validate() const;
  long long cap_for(double lambda) const;
};

/// Gauss-Legendre node count per cell [k/n,(k+1)/n]; with p nodes the
/// per-cell integral is exact for integrands of degree <= 2p-1.
struct QuadratureRule {
  int points_per_cell = 5;

  void validate() const;
};

struct LipschitzHint {
  double constant = 0.0;   // M >= 0
  double exponent = 1.0;   // alpha in (0,1]
};

struct MixedLipschitzHint {
  double constant = 0.0;
  double exponent_x = 1.0;
  double exponent_y = 1.0;
};

struct ScalarFunction {
  std::function<double(double)> eval;
  // Optional declared sup of |f| on [0,T], as a function of T.
  std::function<double(double)> bound_on{};
  std::optional<LipschitzHint> lipschitz{};

  double operator()(double x) const { return eval(x); }
};

struct BivariateFunction {
  std::function<double(double, double)> eval;
  std::function<double(double, double)> bound_on{};
  std::optional<MixedLipschitzHint> lipschitz{};

  double operator()(double x, double y) const { return eval(x, y); }
};

/// Outcome of one truncated series evaluation.
struct EvalResult {
  double value = 0.0;
  long long k_lo = 0;
  long long k_hi = 0;
  double tail_mass = 0.0;
  double t_end = 0.0;  // (k_hi + 1)/n, the end of the touched cell range
  std::optional<double> error_budget{};
};

struct BivariateEvalResult {
  double value = 0.0;
  double tail_mass = 0.0;
  double x_end = 0.0;
  double y_end = 0.0;
  std::optional<double> error_budget{};
};

}  // namespace szmk
