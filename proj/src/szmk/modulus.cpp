#include "szmk/modulus.hpp"

#include <cmath>
#include <deque>
#include <vector>

namespace szmk {
namespace {

constexpr double kIndexFuzz = 1e-9;

long long window_steps(double delta, double h) {
  return static_cast<long long>(std::floor(delta / h + kIndexFuzz));
}

std::vector<double> sample_line(const std::function<double(double)>& f, double end,
                                double h) {
  const long long steps = static_cast<long long>(std::floor(end / h + kIndexFuzz));
  if (steps < 1) fail(ErrorKind::DegenerateGrid, "grid holds fewer than 2 nodes");
  std::vector<double> values(static_cast<std::size_t>(steps) + 1);
  for (long long i = 0; i <= steps; ++i) {
    const double x = static_cast<double>(i) * h;
    const double v = f(x);
    if (!std::isfinite(v)) {
      fail(ErrorKind::NonFiniteFunction,
           "function returned a non-finite value at node x=" + std::to_string(x));
    }
    values[static_cast<std::size_t>(i)] = v;
  }
  return values;
}

// Sliding extrema over index windows of the given width (monotonic deques).
struct WindowExtrema {
  void run(std::span<const double> v, long long width, std::vector<double>& maxs,
           std::vector<double>& mins) {
    const long long n = static_cast<long long>(v.size());
    maxs.resize(v.size());
    mins.resize(v.size());
    std::deque<long long> up;
    std::deque<long long> down;
    for (long long j = 0, i = 0; i < n; ++i) {
      for (; j <= std::min(i + width, n - 1); ++j) {
        while (!up.empty() && v[up.back()] <= v[j]) up.pop_back();
        up.push_back(j);
        while (!down.empty() && v[down.back()] >= v[j]) down.pop_back();
        down.push_back(j);
      }
      if (up.front() < i) up.pop_front();
      if (down.front() < i) down.pop_front();
      maxs[static_cast<std::size_t>(i)] = v[up.front()];
      mins[static_cast<std::size_t>(i)] = v[down.front()];
    }
  }
};

}  // namespace

double max_window_spread(std::span<const double> values, long long width) {
  if (values.size() < 2 || width < 1) return 0.0;
  WindowExtrema sw;
  std::vector<double> maxs;
  std::vector<double> mins;
  sw.run(values, width, maxs, mins);
  double spread = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    spread = std::max(spread, maxs[i] - mins[i]);
  }
  return spread;
}

ModulusEstimate modulus(const ScalarFunction& f, double delta, double domain_end,
                        double grid_step) {
  if (!(delta > 0.0) || !(grid_step > 0.0)) {
    fail(ErrorKind::InvalidArgument, "delta and grid_step must be > 0");
  }
  if (grid_step > delta * (1.0 + kIndexFuzz)) {
    fail(ErrorKind::InvalidArgument, "grid_step must not exceed delta");
  }
  if (!(domain_end > delta)) {
    fail(ErrorKind::InvalidArgument, "domain must extend past delta");
  }
  const std::vector<double> values = sample_line(f.eval, domain_end, grid_step);
  if (values.size() < 2) fail(ErrorKind::DegenerateGrid, "grid holds fewer than 2 nodes");

  ModulusEstimate est;
  est.delta_arg = delta;
  est.grid_step = grid_step;
  est.domain = {0.0, domain_end};
  est.value = max_window_spread(values, window_steps(delta, grid_step));
  for (double v : values) est.sup_abs = std::max(est.sup_abs, std::abs(v));
  if (f.lipschitz) {
    const double h = grid_step;
    const double alpha = f.lipschitz->exponent;
    est.grid_error =
        f.lipschitz->constant * (2.0 * std::pow(0.5 * h, alpha) + std::pow(h, alpha));
  } else {
    est.grid_error = 2.0 * max_window_spread(values, 1);
  }
  return est;
}

BivariateModulusEstimate modulus_bivariate(const BivariateFunction& f, double delta_x,
                                           double delta_y, const Box& domain,
                                           double step_x, double step_y) {
  if (!(delta_x > 0.0) || !(delta_y > 0.0) || !(step_x > 0.0) || !(step_y > 0.0)) {
    fail(ErrorKind::InvalidArgument, "deltas and steps must be > 0");
  }
  if (!(domain.x_hi > delta_x) || !(domain.y_hi > delta_y)) {
    fail(ErrorKind::InvalidArgument, "domain must extend past the deltas");
  }
  const long long nx = static_cast<long long>(std::floor(domain.x_hi / step_x + kIndexFuzz));
  const long long ny = static_cast<long long>(std::floor(domain.y_hi / step_y + kIndexFuzz));
  if (nx < 1 || ny < 1) fail(ErrorKind::DegenerateGrid, "grid holds fewer than 2 nodes");
  const std::size_t cols = static_cast<std::size_t>(nx) + 1;
  const std::size_t rows = static_cast<std::size_t>(ny) + 1;

  std::vector<double> grid(rows * cols);
  double sup_abs = 0.0;
  for (std::size_t j = 0; j < rows; ++j) {
    const double y = static_cast<double>(j) * step_y;
    for (std::size_t i = 0; i < cols; ++i) {
      const double x = static_cast<double>(i) * step_x;
      const double v = f.eval(x, y);
      if (!std::isfinite(v)) {
        fail(ErrorKind::NonFiniteFunction,
             "function returned a non-finite value at (" + std::to_string(x) + "," +
                 std::to_string(y) + ")");
      }
      grid[j * cols + i] = v;
      sup_abs = std::max(sup_abs, std::abs(v));
    }
  }

  const auto spread_2d = [&](long long wx, long long wy) {
    if (wx < 1 || wy < 1) return 0.0;
    WindowExtrema sw;
    std::vector<double> row_max(rows * cols);
    std::vector<double> row_min(rows * cols);
    std::vector<double> tmp_max;
    std::vector<double> tmp_min;
    for (std::size_t j = 0; j < rows; ++j) {
      sw.run(std::span<const double>(grid.data() + j * cols, cols), wx, tmp_max, tmp_min);
      std::copy(tmp_max.begin(), tmp_max.end(), row_max.begin() + j * cols);
      std::copy(tmp_min.begin(), tmp_min.end(), row_min.begin() + j * cols);
    }
    double spread = 0.0;
    std::vector<double> col_max(rows);
    std::vector<double> col_min(rows);
    std::vector<double> env_max;
    std::vector<double> env_min;
    std::vector<double> scratch;
    for (std::size_t i = 0; i < cols; ++i) {
      for (std::size_t j = 0; j < rows; ++j) {
        col_max[j] = row_max[j * cols + i];
        col_min[j] = row_min[j * cols + i];
      }
      sw.run(col_max, wy, env_max, scratch);
      sw.run(col_min, wy, scratch, env_min);
      for (std::size_t j = 0; j < rows; ++j) {
        spread = std::max(spread, env_max[j] - env_min[j]);
      }
    }
    return spread;
  };

  BivariateModulusEstimate est;
  est.delta_x = delta_x;
  est.delta_y = delta_y;
  est.step_x = step_x;
  est.step_y = step_y;
  est.domain = domain;
  est.sup_abs = sup_abs;
  est.value = spread_2d(window_steps(delta_x, step_x), window_steps(delta_y, step_y));
  if (f.lipschitz) {
    const double pow_sum = f.lipschitz->exponent_x + f.lipschitz->exponent_y;
    est.grid_error = f.lipschitz->constant *
                     (2.0 * std::pow(0.5 * std::max(step_x, step_y), pow_sum) +
                      std::pow(std::max(step_x, step_y), pow_sum));
  } else {
    est.grid_error = 2.0 * spread_2d(1, 1);
  }
  return est;
}

}  // namespace szmk
