#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "szmklab.h"

namespace {

cli::Grid parse_grid(const std::string& text) {
  cli::Grid grid;
  const auto first = text.find(':');
  const auto second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw cli::CliError{2, "grid must be start:stop:step"};
  }
  try {
    grid.start = std::stod(text.substr(0, first));
    grid.stop = std::stod(text.substr(first + 1, second - first - 1));
    grid.step = std::stod(text.substr(second + 1));
  } catch (const std::exception&) {
    throw cli::CliError{2, "grid must be start:stop:step with numeric fields"};
  }
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("szmklab ") + szmk_version() +
               " - summation-integral operator laboratory"};
  app.footer(
      "Commands: eval, compare, moments, korovkin, density, certify, bivariate.\n"
      "Functions: one, exp-neg-2x, identity, cubic-roots, cube, inv-1px, cos-pix,\n"
      "           one-2d, uv, wave-2d.\n"
      "Sequences (density): inv-n, alt-sign, sqrt-squares, dev-e1, dev-e2,\n"
      "           tn-dev-e1, even-indicator.");

  cli::Config config;
  std::string grid_text;
  app.add_option("--command", config.command, "command to run")
      ->required()
      ->check(CLI::IsMember(
          {"eval", "compare", "moments", "korovkin", "density", "certify", "bivariate"}));
  app.add_option("--fn", config.fn, "function or sequence id");
  app.add_option("--n", config.n_list, "operator degree (repeatable)");
  app.add_option("--m", config.m_list, "bivariate degree (repeatable)");
  app.add_option("--a", config.a, "base a > 1 (default 1.5; 3 for bivariate)");
  app.add_option("--grid", grid_text, "evaluation grid start:stop:step");
  app.add_option("--tail-eps", config.tail_eps, "series tail mass bound (default 1e-12)");
  app.add_option("--hard-cap", config.hard_cap,
                 "absolute series cutoff index (default: automatic)");
  app.add_option("--quad-points", config.quad_points,
                 "Gauss-Legendre nodes per cell (default 5)");
  app.add_option("--format", config.format, "output format: csv or json");
  app.add_option("--out", config.out, "output path (default stdout)");
  app.add_flag("--weighted", config.weighted, "korovkin: weighted norm 1/(1+x^2)");
  app.add_option("--epsilon", config.epsilons, "exceedance threshold (repeatable)");
  app.add_option("--horizon", config.horizons, "density horizon (repeatable)");
  app.add_option("--beta", config.beta, "degree of statistical convergence in (0,1)");
  app.add_flag("--strict", config.strict, "exit 4 when any certificate fails");
  app.add_option("--bound-scale", config.bound_scale,
                 "certificate bound multiplier (testing aid)")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!grid_text.empty()) config.grid = parse_grid(grid_text);
    return cli::run_command(std::move(config));
  } catch (const cli::CliError& e) {
    std::cerr << "szmklab: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "szmklab: " << e.what() << "\n";
    return 3;
  }
}
