#pragma once

#include <string>
#include <vector>

#include "table.hpp"

namespace cli {

struct CliError {
  int exit_code;
  std::string message;
};

struct Grid {
  double start = -1.0;
  double stop = -1.0;
  double step = -1.0;

  bool set() const { return step > 0.0; }
  long long points() const;
  double at(long long i) const { return start + static_cast<double>(i) * step; }
};

struct Config {
  std::string command;
  std::string fn;
  std::vector<long long> n_list;
  std::vector<long long> m_list;
  double a = -1.0;  // resolved to a per-command default when unset
  Grid grid;
  double tail_eps = 1e-12;
  long long hard_cap = 0;
  int quad_points = 5;
  std::string format = "csv";
  std::string out;
  bool weighted = false;
  std::vector<double> epsilons;
  std::vector<long long> horizons;
  double beta = -1.0;
  bool strict = false;
  double bound_scale = 1.0;
};

/// Executes the configured command and writes the table; returns the process
/// exit code (0 ok, 4 certificate failures under --strict).
int run_command(Config config);

}  // namespace cli
