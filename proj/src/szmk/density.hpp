#pragma once

#include <span>
#include <utility>
#include <vector>

#include "szmk/types.hpp"

namespace szmk {

/// Finite-horizon natural-density evidence for a set of indices.  Counts are
/// exact; trace entries sit at the geometric horizons ceil(N/2^j).
struct DensityReport {
  long long horizon = 0;
  long long exceedance_count = 0;
  double density = 0.0;
  std::optional<double> epsilon{};
  std::vector<std::pair<long long, double>> trace;
};

DensityReport natural_density(const std::function<bool(long long)>& member,
                              long long horizon);

/// Per-epsilon density reports for {n <= N : |x_n - p| >= eps} plus the
/// finite-horizon verdict: consistent iff for every epsilon the trace ends no
/// higher than it starts and the final density is at or below the threshold.
struct StatLimitVerdict {
  double candidate_limit = 0.0;
  double threshold = 0.0;
  bool consistent = false;
  std::vector<DensityReport> reports;
};

StatLimitVerdict stat_limit_check(const std::function<double(long long)>& sequence,
                                  double limit, std::span<const double> epsilons,
                                  long long horizon, double verdict_threshold = 0.01);

/// sqrt(n) on perfect squares, 0 elsewhere: unbounded yet statistically null.
double counterexample_term(long long n);

/// Exceedance counts rescaled by k^{1-beta}, per epsilon.
struct DegreeTrace {
  double beta = 0.0;
  double epsilon = 0.0;
  std::vector<std::pair<long long, double>> scaled;
};

std::vector<DegreeTrace> stat_degree_check(
    const std::function<double(long long)>& sequence, double limit, double beta,
    std::span<const double> epsilons, long long horizon,
    std::span<const long long> horizons = {});

/// Grid sup deviations of the operator from the Korovkin triple e_0, e_1,
/// e_2, from the closed-form moments.  Weighted mode divides by 1 + x^2,
/// sups over [0, x_max] and reports analytic bounds on the ignored tail.
struct KorovkinDeviationRow {
  long long n = 0;
  double a = 0.0;
  double dev_e0 = 0.0;
  double dev_e1 = 0.0;
  double dev_e2 = 0.0;
  std::optional<double> tail_bound_e1{};
  std::optional<double> tail_bound_e2{};
};

std::vector<KorovkinDeviationRow> korovkin_deviations(
    std::span<const OperatorParams> params_list, double l, double grid_step,
    bool weighted = false, double x_max = 100.0);

}  // namespace szmk
