#include <iostream>

#include "CLI11.hpp"
#include "fracdim/cli.hpp"

using fracdim::cli::Command;
using fracdim::cli::RunConfig;

namespace {

void add_outputs(CLI::App* sub, RunConfig& c, bool with_table) {
  sub->add_option("--report", c.report, "JSON report path (stdout when omitted)");
  if (with_table) sub->add_option("--table", c.table, "CSV log-log table path");
  sub->add_option("--seed", c.seed, "Recorded in the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact covering numbers and dimension estimates for Cantor sets and 1-D IFS attractors"};
  app.require_subcommand(1);
  RunConfig c;

  auto* cantor = app.add_subcommand("cantor", "Generalised Cantor prefractal and its box-dimension sequence");
  cantor->add_option("--spec", c.input, "Cantor spec JSON")->required();
  cantor->add_option("--shift", c.shift, "Shift k of C^k");
  cantor->add_option("--depth", c.depth, "Prefractal depth n (<= 24)");
  cantor->add_option("--delta-grid", c.delta_grid, "Box-count scales (default: the piece lengths)");
  add_outputs(cantor, c, true);

  auto* ifs = app.add_subcommand("ifs-run", "Pullback approximation S^{k,k+m}(seed) with its decay trace");
  ifs->add_option("--system", c.input, "System JSON")->required();
  ifs->add_option("--shift", c.shift, "Start level k");
  ifs->add_option("--depth", c.depth, "Number of levels m");
  ifs->add_option("--seed-set", c.seed_set, "Seed set JSON (default [-R, R])");
  add_outputs(ifs, c, false);

  auto* dims = app.add_subcommand("dims", "Box counts and box-dimension estimates");
  dims->add_option("--set", c.input, "Set JSON")->required();
  dims->add_option("--delta-grid", c.delta_grid, "Scales, e.g. 2^-1..2^-12");
  dims->add_option("--exponent", c.exponent, "Check attainment at this dimension");
  add_outputs(dims, c, true);

  auto* assouad = app.add_subcommand("assouad", "Local cover profile with Assouad and lower Assouad estimates");
  assouad->add_option("--set", c.input, "Set JSON")->required();
  assouad->add_option("--delta-grid", c.delta_grid, "Window radii");
  assouad->add_option("--ratio-grid", c.ratio_grid, "Ratios rho/delta in (0,1)");
  assouad->add_option("--center", c.center, "Also estimate from this single point");
  add_outputs(assouad, c, true);

  auto* equihom = app.add_subcommand("equihom", "Equi-homogeneity evidence");
  equihom->add_option("--set", c.input, "Set JSON")->required();
  equihom->add_option("--delta,--delta-grid", c.delta_grid, "Window radii");
  equihom->add_option("--rho-grid", c.rho_grid, "Absolute cover radii");
  equihom->add_option("--ratio-grid", c.ratio_grid, "Ratios rho/delta (when no rho grid)");
  equihom->add_option("--c1", c.c1, "Scale constant on delta for the infimum side");
  equihom->add_option("--c2", c.c2, "Scale constant on rho for the infimum side");
  add_outputs(equihom, c, true);

  auto* verify = app.add_subcommand("verify", "Moran open-set certificate and Moran-equation residuals");
  verify->add_option("--system", c.input, "System JSON")->required();
  verify->add_option("--open-set", c.open_set, "Open set JSON")->required();
  verify->add_option("--epsilon0", c.epsilon0, "Lower bound on the open-set lengths");
  verify->add_option("--levels", c.levels, "Levels to check (0 = default)");
  verify->add_option("--exponent", c.exponent, "Exponent for the residual check (default: level-1 Moran exponent)");
  add_outputs(verify, c, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  for (auto* sub : app.get_subcommands()) {
    if (auto cmd = fracdim::cli::parse_command(sub->get_name())) c.command = *cmd;
  }
  return fracdim::cli::run(c, std::cout, std::cerr);
}
