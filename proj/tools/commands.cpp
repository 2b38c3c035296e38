#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "catalog.hpp"
#include "szmklab.h"

namespace cli {
namespace {

constexpr double kGridFuzz = 1e-9;

std::string short_num(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.15g", v);
  return buffer;
}

std::string join_ll(const std::vector<long long>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i == 0 ? "" : ",") + std::to_string(values[i]);
  }
  return out;
}

std::string join_d(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i == 0 ? "" : ",") + short_num(values[i]);
  }
  return out;
}

std::string grid_str(const Grid& grid) {
  return short_num(grid.start) + ":" + short_num(grid.stop) + ":" + short_num(grid.step);
}

void check(szmk_status status) {
  if (status == SZMK_OK) return;
  throw CliError{status == SZMK_ERR_INVALID_ARGUMENT ? 2 : 3,
                 std::string(szmk_status_name(status)) + ": " + szmk_last_error()};
}

struct EvalGuard {
  szmk_eval* ptr = nullptr;

  EvalGuard(double tail_eps, long long hard_cap, int quad_points) {
    ptr = szmk_eval_new();
    if (ptr == nullptr) throw CliError{3, "failed to allocate evaluation context"};
    check(szmk_eval_set_tail_eps(ptr, tail_eps));
    check(szmk_eval_set_hard_cap(ptr, hard_cap));
    check(szmk_eval_set_quad_points(ptr, quad_points));
  }
  ~EvalGuard() { szmk_eval_free(ptr); }
  EvalGuard(const EvalGuard&) = delete;
  EvalGuard& operator=(const EvalGuard&) = delete;
};

const CatalogEntry& entry_or_throw(const std::string& id, int arity) {
  const CatalogEntry* entry = find_entry(id);
  if (entry == nullptr) throw CliError{2, "unknown function id: " + id};
  if (entry->arity != arity) {
    throw CliError{2, "function " + id + " has arity " + std::to_string(entry->arity)};
  }
  return *entry;
}

void* entry_ctx(const CatalogEntry& entry) {
  return const_cast<void*>(static_cast<const void*>(&entry));
}

std::string op_label(char name, const char* deg_symbol, long long deg, double a) {
  std::string out(1, name);
  out += "[" + std::string(deg_symbol) + "=" + std::to_string(deg);
  if (a > 0.0) out += ";a=" + short_num(a);
  return out + "]";
}

void base_config(Table& table, const Config& config, bool with_fn = true) {
  if (with_fn) {
    table.config.emplace_back("fn", config.fn);
    if (const CatalogEntry* entry = find_entry(config.fn)) {
      table.config.emplace_back("def", entry->definition);
    }
  }
  table.config.emplace_back("a", short_num(config.a));
  if (!config.n_list.empty()) table.config.emplace_back("n", join_ll(config.n_list));
  if (!config.m_list.empty()) table.config.emplace_back("m", join_ll(config.m_list));
  table.config.emplace_back("grid", grid_str(config.grid));
  table.config.emplace_back("tail-eps", short_num(config.tail_eps));
  if (config.hard_cap > 0) {
    table.config.emplace_back("hard-cap", std::to_string(config.hard_cap));
  }
  table.config.emplace_back("quad-points", std::to_string(config.quad_points));
}

// --- eval ------------------------------------------------------------------

Table cmd_eval(const Config& config) {
  const CatalogEntry& entry = entry_or_throw(config.fn, 1);
  EvalGuard eval(config.tail_eps, config.hard_cap, config.quad_points);

  Table table;
  table.command = "eval";
  base_config(table, config);
  table.columns = {"x", "f"};
  for (long long n : config.n_list) {
    table.columns.push_back(op_label('S', "n", n, config.a));
  }
  for (long long i = 0; i < config.grid.points(); ++i) {
    const double x = config.grid.at(i);
    std::vector<Cell> row{x, entry.f1(x)};
    for (long long n : config.n_list) {
      szmk_apply_info info;
      check(szmk_apply(eval.ptr, n, config.a, entry_fn1, entry_ctx(entry), x, &info));
      row.emplace_back(info.value);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

// --- compare ---------------------------------------------------------------

Table cmd_compare(const Config& config) {
  const CatalogEntry& entry = entry_or_throw(config.fn, 1);
  EvalGuard eval(config.tail_eps, config.hard_cap, config.quad_points);

  Table table;
  table.command = "compare";
  base_config(table, config);
  table.columns = {"x", "f"};
  for (long long n : config.n_list) {
    table.columns.push_back(op_label('S', "n", n, config.a));
    table.columns.push_back(op_label('K', "n", n, -1.0));
    table.columns.push_back("err-S[n=" + std::to_string(n) + "]");
    table.columns.push_back("err-K[n=" + std::to_string(n) + "]");
  }
  std::vector<double> max_s(config.n_list.size(), 0.0);
  std::vector<double> max_k(config.n_list.size(), 0.0);
  for (long long i = 0; i < config.grid.points(); ++i) {
    const double x = config.grid.at(i);
    const double fx = entry.f1(x);
    std::vector<Cell> row{x, fx};
    for (std::size_t j = 0; j < config.n_list.size(); ++j) {
      const long long n = config.n_list[j];
      szmk_apply_info s;
      szmk_apply_info k;
      check(szmk_apply(eval.ptr, n, config.a, entry_fn1, entry_ctx(entry), x, &s));
      check(szmk_apply_kantorovich(eval.ptr, n, entry_fn1, entry_ctx(entry), x, &k));
      const double err_s = std::abs(s.value - fx);
      const double err_k = std::abs(k.value - fx);
      max_s[j] = std::max(max_s[j], err_s);
      max_k[j] = std::max(max_k[j], err_k);
      row.emplace_back(s.value);
      row.emplace_back(k.value);
      row.emplace_back(err_s);
      row.emplace_back(err_k);
    }
    table.rows.push_back(std::move(row));
  }
  std::vector<Cell> summary{std::string("max-abs-error"), std::string("")};
  for (std::size_t j = 0; j < config.n_list.size(); ++j) {
    summary.emplace_back(std::string(""));
    summary.emplace_back(std::string(""));
    summary.emplace_back(max_s[j]);
    summary.emplace_back(max_k[j]);
  }
  table.rows.push_back(std::move(summary));
  return table;
}

// --- moments ---------------------------------------------------------------

struct MonomialCtx {
  int degree;
  double shift;  // integrand (u - shift)^degree
};

double monomial_fn(double u, void* ctx) {
  const auto* c = static_cast<const MonomialCtx*>(ctx);
  return std::pow(u - c->shift, c->degree);
}

Table cmd_moments(const Config& config) {
  EvalGuard eval(config.tail_eps, config.hard_cap, config.quad_points);

  Table table;
  table.command = "moments";
  base_config(table, config, false);
  table.columns = {"n", "x", "moment", "closed-form", "series", "rel-diff"};

  const auto add_row = [&table](long long n, double x, const std::string& name,
                                double closed, double series) {
    const double rel =
        std::abs(closed - series) / std::max({1.0, std::abs(closed), std::abs(series)});
    table.rows.push_back({n, x, name, closed, series, rel});
  };

  for (long long n : config.n_list) {
    for (long long i = 0; i < config.grid.points(); ++i) {
      const double x = config.grid.at(i);
      double raw[4];
      double central[4];
      check(szmk_raw_moments(n, config.a, x, raw));
      check(szmk_central_moments(n, config.a, x, central));
      for (int d = 0; d <= 3; ++d) {
        MonomialCtx ctx{d, 0.0};
        szmk_apply_info info;
        check(szmk_apply(eval.ptr, n, config.a, monomial_fn, &ctx, x, &info));
        add_row(n, x, "e" + std::to_string(d), raw[d], info.value);
      }
      for (int d = 1; d <= 4; ++d) {
        MonomialCtx ctx{d, x};
        szmk_apply_info info;
        check(szmk_apply(eval.ptr, n, config.a, monomial_fn, &ctx, x, &info));
        add_row(n, x, "c" + std::to_string(d), central[d - 1], info.value);
      }
      double dval = 0.0;
      check(szmk_delta(n, config.a, x, &dval));
      MonomialCtx ctx{2, x};
      szmk_apply_info info;
      check(szmk_apply(eval.ptr, n, config.a, monomial_fn, &ctx, x, &info));
      add_row(n, x, "delta", dval, info.value);
    }
  }
  return table;
}

// --- korovkin ----------------------------------------------------------------

Table cmd_korovkin(const Config& config) {
  Table table;
  table.command = "korovkin";
  base_config(table, config, false);
  table.config.emplace_back("weighted", config.weighted ? "1" : "0");
  table.columns = {"n", "a", "dev-e0", "dev-e1", "dev-e2"};
  if (config.weighted) {
    table.columns.push_back("tail-bound-e1");
    table.columns.push_back("tail-bound-e2");
  }
  for (long long n : config.n_list) {
    double dev[3];
    double tails[2] = {0.0, 0.0};
    check(szmk_korovkin_row(n, config.a, config.weighted ? 1.0 : config.grid.stop,
                            config.grid.step, config.weighted ? 1 : 0, config.grid.stop,
                            dev, tails));
    std::vector<Cell> row{n, config.a, dev[0], dev[1], dev[2]};
    if (config.weighted) {
      row.emplace_back(tails[0]);
      row.emplace_back(tails[1]);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

// --- density -----------------------------------------------------------------

struct SequenceCtx {
  // 0 inv-n, 1 alt-sign, 2 sqrt-squares, 3 dev-e1, 4 dev-e2, 5 tn-dev-e1,
  // 6 even-indicator
  int kind;
  double a;
};

double sequence_fn(long long n, void* raw) {
  const auto* ctx = static_cast<const SequenceCtx*>(raw);
  switch (ctx->kind) {
    case 0:
      return 1.0 / static_cast<double>(n);
    case 1:
      return n % 2 == 0 ? 1.0 : -1.0;
    case 2:
      return szmk_counterexample_term(n);
    case 3:
    case 4: {
      double dev[3];
      if (szmk_korovkin_row(n, ctx->a, 1.0, 0.1, 0, 100.0, dev, nullptr) != SZMK_OK) {
        return 0.0;
      }
      return ctx->kind == 3 ? dev[1] : dev[2];
    }
    case 5: {
      double dev[3];
      double raw_m[4];
      if (szmk_korovkin_row(n, ctx->a, 1.0, 0.1, 0, 100.0, dev, nullptr) != SZMK_OK ||
          szmk_raw_moments(n, ctx->a, 1.0, raw_m) != SZMK_OK) {
        return 0.0;
      }
      return dev[1] + szmk_counterexample_term(n) * raw_m[1];
    }
    case 6:
      return n % 2 == 0 ? 1.0 : 0.0;
    default:
      return 0.0;
  }
}

struct ExceedanceCtx {
  SequenceCtx seq;
  double limit;
  double epsilon;
};

int exceedance_fn(long long n, void* raw) {
  const auto* ctx = static_cast<const ExceedanceCtx*>(raw);
  return std::abs(sequence_fn(n, const_cast<SequenceCtx*>(&ctx->seq)) - ctx->limit) >=
                 ctx->epsilon
             ? 1
             : 0;
}

int sequence_kind(const std::string& id) {
  if (id == "inv-n") return 0;
  if (id == "alt-sign") return 1;
  if (id == "sqrt-squares") return 2;
  if (id == "dev-e1") return 3;
  if (id == "dev-e2") return 4;
  if (id == "tn-dev-e1") return 5;
  if (id == "even-indicator") return 6;
  throw CliError{2, "unknown sequence id: " + id +
                        " (expected inv-n, alt-sign, sqrt-squares, dev-e1, dev-e2, "
                        "tn-dev-e1, even-indicator)"};
}

Table cmd_density(const Config& config) {
  SequenceCtx seq{sequence_kind(config.fn), config.a};
  const long long max_horizon =
      *std::max_element(config.horizons.begin(), config.horizons.end());

  Table table;
  table.command = "density";
  table.config.emplace_back("fn", config.fn);
  table.config.emplace_back("a", short_num(config.a));
  table.config.emplace_back("epsilon", join_d(config.epsilons));
  table.config.emplace_back("horizon", join_ll(config.horizons));
  if (config.beta > 0.0) table.config.emplace_back("beta", short_num(config.beta));

  if (config.beta > 0.0) {
    table.columns = {"sequence", "epsilon", "beta", "N", "scaled-count"};
    std::vector<long long> marks = config.horizons;
    std::sort(marks.begin(), marks.end());
    std::vector<double> scaled(marks.size());
    for (double eps : config.epsilons) {
      check(szmk_stat_degree_trace(sequence_fn, &seq, 0.0, config.beta, eps,
                                   marks.data(), static_cast<int>(marks.size()),
                                   scaled.data()));
      for (std::size_t i = 0; i < marks.size(); ++i) {
        table.rows.push_back({config.fn, eps, config.beta, marks[i], scaled[i]});
      }
    }
    return table;
  }

  table.columns = {"sequence", "epsilon", "N", "count", "density"};
  for (double eps : config.epsilons) {
    ExceedanceCtx ctx{seq, 0.0, eps};
    for (long long horizon : config.horizons) {
      long long count = 0;
      double density = 0.0;
      check(szmk_natural_density(exceedance_fn, &ctx, horizon, &count, &density));
      table.rows.push_back({config.fn, eps, horizon, count, density});
    }
  }
  int consistent = 0;
  check(szmk_stat_limit_check(sequence_fn, &seq, 0.0, config.epsilons.data(),
                              static_cast<int>(config.epsilons.size()), max_horizon,
                              0.01, &consistent));
  table.summary.emplace_back("limit", "0");
  table.summary.emplace_back("verdict", consistent ? "consistent" : "inconsistent");
  return table;
}

// --- certify -----------------------------------------------------------------

Table cmd_certify(const Config& config, int* failures) {
  EvalGuard eval(config.tail_eps, config.hard_cap, config.quad_points);
  Table table;
  table.command = "certify";
  base_config(table, config);
  table.config.emplace_back("bound-scale", short_num(config.bound_scale));

  long long passes = 0;
  long long fails = 0;
  const auto push = [&](std::vector<Cell> row, const szmk_certificate& cert) {
    row.emplace_back(cert.actual_error);
    row.emplace_back(cert.bound_value);
    row.emplace_back(cert.margin);
    row.emplace_back(cert.slack);
    row.emplace_back(static_cast<long long>(cert.pass));
    (cert.pass ? passes : fails) += 1;
    table.rows.push_back(std::move(row));
  };

  if (config.m_list.empty()) {
    const CatalogEntry& entry = entry_or_throw(config.fn, 1);
    table.columns = {"kind",  "fn",    "n",      "a",     "x",   "actual-error",
                     "bound", "margin", "slack", "pass"};
    for (long long n : config.n_list) {
      for (long long i = 0; i < config.grid.points(); ++i) {
        const double x = config.grid.at(i);
        szmk_certificate cert;
        check(szmk_certify_modulus(eval.ptr, n, config.a, entry_fn1, entry_ctx(entry),
                                   entry.lip_m, entry.lip_alpha, x, config.bound_scale,
                                   &cert));
        push({std::string("modulus"), config.fn, n, config.a, x}, cert);
        if (entry.lip_m >= 0.0) {
          check(szmk_certify_lipschitz(eval.ptr, n, config.a, entry_fn1,
                                       entry_ctx(entry), entry.lip_m, entry.lip_alpha, x,
                                       config.bound_scale, &cert));
          push({std::string("lipschitz"), config.fn, n, config.a, x}, cert);
        }
      }
    }
  } else {
    const CatalogEntry& entry = entry_or_throw(config.fn, 2);
    table.columns = {"kind",  "fn",    "m",      "a",     "x",   "y",
                     "actual-error", "bound", "margin", "slack", "pass"};
    for (long long m : config.m_list) {
      for (long long i = 0; i < config.grid.points(); ++i) {
        for (long long j = 0; j < config.grid.points(); ++j) {
          const double x = config.grid.at(i);
          const double y = config.grid.at(j);
          szmk_certificate cert;
          check(szmk_certify_bivariate(eval.ptr, m, config.a, entry_fn2,
                                       entry_ctx(entry), x, y, config.bound_scale,
                                       &cert));
          push({std::string("modulus-2d"), config.fn, m, config.a, x, y}, cert);
        }
      }
    }
  }
  table.summary.emplace_back("passes", std::to_string(passes));
  table.summary.emplace_back("failures", std::to_string(fails));
  *failures = static_cast<int>(fails);
  return table;
}

// --- bivariate ---------------------------------------------------------------

Table cmd_bivariate(const Config& config) {
  const CatalogEntry& entry = entry_or_throw(config.fn, 2);
  EvalGuard eval(config.tail_eps, config.hard_cap, config.quad_points);

  Table table;
  table.command = "bivariate";
  base_config(table, config);
  table.columns = {"x", "y", "f"};
  for (long long m : config.m_list) {
    table.columns.push_back(op_label('Y', "m", m, config.a));
  }
  std::vector<double> max_err(config.m_list.size(), 0.0);
  for (long long i = 0; i < config.grid.points(); ++i) {
    for (long long j = 0; j < config.grid.points(); ++j) {
      const double x = config.grid.at(i);
      const double y = config.grid.at(j);
      const double fxy = entry.f2(x, y);
      std::vector<Cell> row{x, y, fxy};
      for (std::size_t s = 0; s < config.m_list.size(); ++s) {
        szmk_apply_info info;
        check(szmk_apply_bivariate(eval.ptr, config.m_list[s], config.a, entry_fn2,
                                   entry_ctx(entry), x, y, &info));
        max_err[s] = std::max(max_err[s], std::abs(info.value - fxy));
        row.emplace_back(info.value);
      }
      table.rows.push_back(std::move(row));
    }
  }
  for (std::size_t s = 0; s < config.m_list.size(); ++s) {
    table.summary.emplace_back("max-abs-err[m=" + std::to_string(config.m_list[s]) + "]",
                               format_value(max_err[s]));
  }
  return table;
}

// --- dispatch ----------------------------------------------------------------

void resolve_defaults(Config& config) {
  const auto grid_default = [&](double start, double stop, double step) {
    if (!config.grid.set()) config.grid = Grid{start, stop, step};
  };
  const auto a_default = [&](double value) {
    if (config.a <= 0.0) config.a = value;
  };
  if (config.command == "eval") {
    if (config.fn.empty()) config.fn = "exp-neg-2x";
    if (config.n_list.empty()) config.n_list = {5, 10};
    a_default(1.5);
    grid_default(0.0, 2.0, 0.05);
  } else if (config.command == "compare") {
    if (config.fn.empty()) config.fn = "cube";
    if (config.n_list.empty()) config.n_list = {10};
    a_default(1.5);
    grid_default(0.0, 1.0, 0.05);
  } else if (config.command == "moments") {
    if (config.n_list.empty()) config.n_list = {5};
    a_default(1.5);
    grid_default(0.0, 2.0, 0.5);
  } else if (config.command == "korovkin") {
    if (config.n_list.empty()) config.n_list = {10, 100, 1000, 10000};
    a_default(1.5);
    if (config.weighted) {
      grid_default(0.0, 100.0, 0.25);
    } else {
      grid_default(0.0, 1.0, 0.01);
    }
  } else if (config.command == "density") {
    if (config.fn.empty()) config.fn = "sqrt-squares";
    a_default(1.5);
    if (config.epsilons.empty()) config.epsilons = {1.0, 0.1, 0.01};
    if (config.horizons.empty()) config.horizons = {1000, 10000, 100000, 1000000};
    grid_default(0.0, 1.0, 1.0);
  } else if (config.command == "certify") {
    if (config.m_list.empty()) {
      if (config.fn.empty()) config.fn = "exp-neg-2x";
      if (config.n_list.empty()) config.n_list = {5, 10, 20, 100};
      a_default(1.5);
      grid_default(0.0, 1.0, 0.05);
    } else {
      if (config.fn.empty()) config.fn = "wave-2d";
      a_default(3.0);
      grid_default(0.0, 1.0, 0.1);
    }
  } else if (config.command == "bivariate") {
    if (config.fn.empty()) config.fn = "wave-2d";
    if (config.m_list.empty()) config.m_list = {5, 10, 20};
    a_default(3.0);
    grid_default(0.0, 1.0, 0.1);
  } else {
    throw CliError{2, "unknown command: " + config.command};
  }
}

void validate(const Config& config) {
  if (config.grid.start < 0.0 || config.grid.step <= 0.0 ||
      config.grid.stop < config.grid.start) {
    throw CliError{2, "grid must satisfy start >= 0, step > 0, stop >= start"};
  }
  if (config.a <= 1.0) throw CliError{2, "base a must be > 1"};
  for (long long n : config.n_list) {
    if (n < 1) throw CliError{2, "degrees must be >= 1"};
  }
  for (long long m : config.m_list) {
    if (m < 1) throw CliError{2, "degrees must be >= 1"};
  }
  if (config.tail_eps <= 0.0 || config.tail_eps >= 1.0) {
    throw CliError{2, "tail-eps must lie in (0,1)"};
  }
  if (config.hard_cap < 0) throw CliError{2, "hard-cap must be >= 0"};
  if (config.quad_points < 1) throw CliError{2, "quad-points must be >= 1"};
  if (config.format != "csv" && config.format != "json") {
    throw CliError{2, "format must be csv or json"};
  }
  for (double eps : config.epsilons) {
    if (eps <= 0.0) throw CliError{2, "epsilons must be > 0"};
  }
  for (long long h : config.horizons) {
    if (h < 1) throw CliError{2, "horizons must be >= 1"};
  }
  if (config.beta != -1.0 && (config.beta <= 0.0 || config.beta >= 1.0)) {
    throw CliError{2, "beta must lie in (0,1)"};
  }
  if (config.bound_scale <= 0.0) throw CliError{2, "bound-scale must be > 0"};
}

}  // namespace

long long Grid::points() const {
  return static_cast<long long>(std::floor((stop - start) / step + kGridFuzz)) + 1;
}

int run_command(Config config) {
  resolve_defaults(config);
  validate(config);

  int failures = 0;
  Table table;
  if (config.command == "eval") {
    table = cmd_eval(config);
  } else if (config.command == "compare") {
    table = cmd_compare(config);
  } else if (config.command == "moments") {
    table = cmd_moments(config);
  } else if (config.command == "korovkin") {
    table = cmd_korovkin(config);
  } else if (config.command == "density") {
    table = cmd_density(config);
  } else if (config.command == "certify") {
    table = cmd_certify(config, &failures);
  } else {
    table = cmd_bivariate(config);
  }

  const std::string text = config.format == "csv" ? to_csv(table) : to_json(table);
  if (config.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(config.out, std::ios::binary);
    if (!file) throw CliError{2, "cannot open output path: " + config.out};
    file << text;
  }
  return config.strict && failures > 0 ? 4 : 0;
}

}  // namespace cli
