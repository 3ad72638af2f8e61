#pragma once

#include <functional>
#include <vector>

#include "wbflow/grid.hpp"
#include "wbflow/problems.hpp"
#include "wbflow/solver.hpp"

namespace wbflow {

// Interior cell values of one primitive variable.
std::vector<double> interior_pressure(const std::vector<ConsState>& u, const Grid1D& grid,
                                      const EosModel& eos);
std::vector<double> interior_density(const std::vector<ConsState>& u, const Grid1D& grid,
                                     const EosModel& eos);
std::vector<double> interior_velocity(const std::vector<ConsState>& u, const Grid1D& grid,
                                      const EosModel& eos);

// Volume-weighted discrete L1 norms (the weight is dx in Cartesian geometry).
double err1(const std::vector<double>& q, const std::vector<double>& q_ref, const Grid1D& grid);
double relerr1(const std::vector<double>& q, const std::vector<double>& q_ref,
               const Grid1D& grid);

// Conservative restriction of interior values from a finer grid onto one
// coarsened by an integer factor: volume-weighted child averages.
std::vector<double> restrict_interior(const std::vector<double>& fine, const Grid1D& fine_grid,
                                      int factor);

// Characteristic crossing time, midpoint quadrature of dx / (|v| + c).
double crossing_time(const std::vector<ConsState>& u, const Grid1D& grid, const EosModel& eos);

struct ConvergenceRow {
  int n = 0;
  double err_std = 0.0;
  double rate_std = 0.0;  // log2(err(N) / err(2N)); 0 on the coarsest row
  double err_wb = 0.0;
  double rate_wb = 0.0;
};

struct ConvergenceOptions {
  std::vector<int> n_values;
  int reference_n = 0;  // 0: compare against the run's own initial pressure
  bool run_standard = true;
  bool run_wellbalanced = true;
};

using ProblemFactory = std::function<Problem1D(int n, SchemeVariant variant)>;

// Runs the refinement ladder for both scheme variants and fills in observed
// rates. With reference_n > 0 the errors are measured against the
// well-balanced solution on the fine grid, restricted by cell averaging.
std::vector<ConvergenceRow> convergence_table(const ProblemFactory& factory,
                                              const ConvergenceOptions& opt);

}  // namespace wbflow
