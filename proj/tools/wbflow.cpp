// Experiment driver: run single configurations or convergence suites and
// write CSV snapshots/tables.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wbflow/config.hpp"
#include "wbflow/csv_io.hpp"
#include "wbflow/diagnostics.hpp"
#include "wbflow/errors.hpp"

namespace fs = std::filesystem;
using namespace wbflow;

namespace {

void warn_unknown_keys(const KeyValues& kv) {
  for (const std::string& key : kv.unconsumed()) {
    std::cerr << "warning: unrecognized config key '" << key << "'\n";
  }
}

std::string snapshot_name(const std::string& dir, const std::string& base, int index, double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "_%03d_t%.6g.csv", index, t);
  return (fs::path(dir) / (base + buf)).string();
}

int cmd_run(const std::string& config_path) {
  KeyValues kv = KeyValues::parse_file(config_path);
  RunSetup setup = build_run(kv);
  warn_unknown_keys(kv);
  fs::create_directories(setup.output_path);

  if (std::holds_alternative<Problem1D>(setup.problem)) {
    Problem1D& prob = std::get<Problem1D>(setup.problem);
    EulerSolver1D solver = prob.make_solver();
    RunReport report = run(solver, prob.initial, prob.time);

    int index = 0;
    for (const auto& [t, u] : report.snapshots) {
      std::ofstream out(snapshot_name(setup.output_path, prob.name, index++, t));
      write_snapshot_csv(out, prob.grid, u, prob.eos);
    }
    const std::string final_path =
        (fs::path(setup.output_path) / (prob.name + "_final.csv")).string();
    std::ofstream out(final_path);
    write_snapshot_csv(out, prob.grid, report.final.u, prob.eos);

    std::cout << prob.name << ": " << report.steps << " steps to t = " << report.final.t
              << ", fallback cell-stages = " << report.fallback_cell_stages << ", wall "
              << report.wall_seconds << " s\n"
              << "wrote " << final_path << "\n";
    return 0;
  }

  Problem2D& prob = std::get<Problem2D>(setup.problem);
  EulerSolver2D solver = prob.make_solver();
  SolutionField2D field = prob.initial;
  long steps = 0;
  while (field.t < prob.time.t_end) {
    double dt = solver.cfl_timestep(field.u, prob.time.cfl);
    const bool last = field.t + dt >= prob.time.t_end;
    if (last) dt = prob.time.t_end - field.t;
    solver.step(field.u, dt, prob.time.rk_order);
    field.t = last ? prob.time.t_end : field.t + dt;
    ++steps;
  }
  const std::string final_path =
      (fs::path(setup.output_path) / (prob.name + "_final.csv")).string();
  std::ofstream out(final_path);
  write_snapshot2d_csv(out, prob.grid, field.u, prob.eos);
  std::cout << prob.name << ": " << steps << " steps to t = " << field.t << "\nwrote "
            << final_path << "\n";
  return 0;
}

int cmd_suite(const std::string& config_path) {
  KeyValues kv = KeyValues::parse_file(config_path);
  SuiteSetup suite = build_suite(kv);
  warn_unknown_keys(kv);
  fs::create_directories(suite.output_path);

  const std::vector<ConvergenceRow> rows = convergence_table(suite.factory, suite.convergence);
  const std::string path =
      (fs::path(suite.output_path) / (suite.problem_name + "_convergence.csv")).string();
  std::ofstream out(path);
  write_convergence_csv(out, rows);

  std::ostringstream echo;
  write_convergence_csv(echo, rows);
  std::cout << echo.str() << "wrote " << path << "\n";
  return 0;
}

int cmd_list_problems() {
  std::cout << "gaussian_bump   steady flow under a linear potential, optional pressure bump\n"
               "                (problem.mach in {0, 0.01, 2.5}, problem.amplitude)\n"
               "bondi           spherical accretion profile, optional pressure bump\n"
               "                (problem.mach in {0.9, 2.0}, problem.amplitude)\n"
               "bondi_large     large-amplitude bondi variant (MinMod, short run)\n"
               "bondi_shock     accretion profile with a stationary shock at r = 1 (even N)\n"
               "xaligned2d      x-aligned steady flow on a 2D Cartesian grid\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite volume experiments for steady adiabatic flow with gravity"};
  app.require_subcommand(1);

  std::string run_config, suite_config;
  CLI::App* run_cmd = app.add_subcommand("run", "run one experiment from a config file");
  run_cmd->add_option("config", run_config, "key = value config file")->required();
  CLI::App* suite_cmd = app.add_subcommand("suite", "run a convergence suite");
  suite_cmd->add_option("config", suite_config, "key = value suite config file")->required();
  app.add_subcommand("list-problems", "list the named problem presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) return cmd_run(run_config);
    if (suite_cmd->parsed()) return cmd_suite(suite_config);
    return cmd_list_problems();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
