#include "szmk/density.hpp"

#include <algorithm>
#include <cmath>

#include "szmk/stable.hpp"

namespace szmk {
namespace {

std::vector<long long> geometric_horizons(long long horizon) {
  std::vector<long long> out;
  for (long long h = horizon; h >= 1; h = (h + 1) / 2) {
    out.push_back(h);
    if (h == 1) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DensityReport count_exceedances(const std::function<bool(long long)>& member,
                                long long horizon) {
  const std::vector<long long> marks = geometric_horizons(horizon);
  DensityReport report;
  report.horizon = horizon;
  long long count = 0;
  std::size_t next = 0;
  for (long long n = 1; n <= horizon; ++n) {
    if (member(n)) ++count;
    while (next < marks.size() && marks[next] == n) {
      report.trace.emplace_back(n, static_cast<double>(count) / static_cast<double>(n));
      ++next;
    }
  }
  report.exceedance_count = count;
  report.density = static_cast<double>(count) / static_cast<double>(horizon);
  return report;
}

}  // namespace

DensityReport natural_density(const std::function<bool(long long)>& member,
                              long long horizon) {
  if (horizon < 1) fail(ErrorKind::InvalidArgument, "horizon must be >= 1");
  return count_exceedances(member, horizon);
}

StatLimitVerdict stat_limit_check(const std::function<double(long long)>& sequence,
                                  double limit, std::span<const double> epsilons,
                                  long long horizon, double verdict_threshold) {
  if (horizon < 1) fail(ErrorKind::InvalidArgument, "horizon must be >= 1");
  if (epsilons.empty()) fail(ErrorKind::InvalidArgument, "need at least one epsilon");
  StatLimitVerdict verdict;
  verdict.candidate_limit = limit;
  verdict.threshold = verdict_threshold;
  verdict.consistent = true;
  for (double eps : epsilons) {
    if (!(eps > 0.0)) fail(ErrorKind::InvalidArgument, "epsilon must be > 0");
    DensityReport report = count_exceedances(
        [&](long long n) { return std::abs(sequence(n) - limit) >= eps; }, horizon);
    report.epsilon = eps;
    const double first = report.trace.front().second;
    const double last = report.trace.back().second;
    if (!(last <= first && last <= verdict_threshold)) verdict.consistent = false;
    verdict.reports.push_back(std::move(report));
  }
  return verdict;
}

double counterexample_term(long long n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "index must be >= 1");
  long long root = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(n))));
  while (root > 0 && root * root > n) --root;
  while ((root + 1) * (root + 1) <= n) ++root;
  return root * root == n ? static_cast<double>(root) : 0.0;
}

std::vector<DegreeTrace> stat_degree_check(
    const std::function<double(long long)>& sequence, double limit, double beta,
    std::span<const double> epsilons, long long horizon,
    std::span<const long long> horizons) {
  if (!(beta > 0.0 && beta < 1.0)) {
    fail(ErrorKind::InvalidArgument, "beta must lie in (0,1)");
  }
  if (horizon < 1) fail(ErrorKind::InvalidArgument, "horizon must be >= 1");
  static constexpr long long kDefault[] = {1000, 10000, 100000, 1000000};
  std::vector<long long> marks;
  if (horizons.empty()) {
    for (long long h : kDefault) {
      if (h <= horizon) marks.push_back(h);
    }
    if (marks.empty() || marks.back() != horizon) marks.push_back(horizon);
  } else {
    marks.assign(horizons.begin(), horizons.end());
    std::sort(marks.begin(), marks.end());
    if (marks.front() < 1 || marks.back() > horizon) {
      fail(ErrorKind::InvalidArgument, "degree horizons must lie in [1, horizon]");
    }
  }

  std::vector<DegreeTrace> out;
  for (double eps : epsilons) {
    if (!(eps > 0.0)) fail(ErrorKind::InvalidArgument, "epsilon must be > 0");
    DegreeTrace trace;
    trace.beta = beta;
    trace.epsilon = eps;
    long long count = 0;
    std::size_t next = 0;
    for (long long n = 1; n <= marks.back(); ++n) {
      if (std::abs(sequence(n) - limit) >= eps) ++count;
      while (next < marks.size() && marks[next] == n) {
        const double scale = std::pow(static_cast<double>(n), 1.0 - beta);
        trace.scaled.emplace_back(n, static_cast<double>(count) / scale);
        ++next;
      }
    }
    out.push_back(std::move(trace));
  }
  return out;
}

std::vector<KorovkinDeviationRow> korovkin_deviations(
    std::span<const OperatorParams> params_list, double l, double grid_step,
    bool weighted, double x_max) {
  if (!(l > 0.0)) fail(ErrorKind::InvalidArgument, "l must be > 0");
  if (!(grid_step > 0.0)) fail(ErrorKind::InvalidArgument, "grid_step must be > 0");
  if (weighted && !(x_max >= 1.0)) {
    fail(ErrorKind::InvalidArgument, "weighted mode requires x_max >= 1");
  }
  const double stop = weighted ? x_max : l;

  std::vector<KorovkinDeviationRow> rows;
  rows.reserve(params_list.size());
  for (const OperatorParams& params : params_list) {
    params.validate();
    const double inv_n = 1.0 / static_cast<double>(params.n);
    const double excess = stable::mean_ratio_excess(params.a, params.n);
    const double rho = 1.0 + excess;

    KorovkinDeviationRow row;
    row.n = params.n;
    row.a = params.a;
    const long long steps = static_cast<long long>(std::floor(stop / grid_step + 1e-9));
    for (long long i = 0; i <= steps; ++i) {
      const double x = static_cast<double>(i) * grid_step;
      const double w = weighted ? 1.0 / (1.0 + x * x) : 1.0;
      const double d1 = std::abs(0.5 * inv_n + excess * x) * w;
      const double d2 =
          std::abs(inv_n * inv_n / 3.0 + 2.0 * rho * x * inv_n + (rho * rho - 1.0) * x * x) *
          w;
      row.dev_e1 = std::max(row.dev_e1, d1);
      row.dev_e2 = std::max(row.dev_e2, d2);
    }
    if (weighted) {
      // Beyond x_max: x/(1+x^2) decreases and x^2/(1+x^2) increases to 1, so
      // the ignored tail of each weighted sup is bounded by these values.
      const double frac = x_max / (1.0 + x_max * x_max);
      row.tail_bound_e1 = 0.5 * inv_n / (1.0 + x_max * x_max) + std::abs(excess) * frac;
      row.tail_bound_e2 = inv_n * inv_n / 3.0 / (1.0 + x_max * x_max) +
                          2.0 * rho * inv_n * frac + (1.0 - rho * rho);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace szmk
