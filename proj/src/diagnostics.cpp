#include "wbflow/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "wbflow/errors.hpp"

namespace wbflow {

std::vector<double> interior_pressure(const std::vector<ConsState>& u, const Grid1D& grid,
                                      const EosModel& eos) {
  std::vector<double> q(grid.n_cells);
  for (int c = grid.begin(); c < grid.end(); ++c) {
    q[c - grid.begin()] = to_primitive(u[c], eos).p;
  }
  return q;
}

std::vector<double> interior_density(const std::vector<ConsState>& u, const Grid1D& grid,
                                     const EosModel&) {
  std::vector<double> q(grid.n_cells);
  for (int c = grid.begin(); c < grid.end(); ++c) {
    q[c - grid.begin()] = u[c].rho;
  }
  return q;
}

std::vector<double> interior_velocity(const std::vector<ConsState>& u, const Grid1D& grid,
                                      const EosModel&) {
  std::vector<double> q(grid.n_cells);
  for (int c = grid.begin(); c < grid.end(); ++c) {
    q[c - grid.begin()] = u[c].mom / u[c].rho;
  }
  return q;
}

double err1(const std::vector<double>& q, const std::vector<double>& q_ref, const Grid1D& grid) {
  if (q.size() != q_ref.size() || static_cast<int>(q.size()) != grid.n_cells) {
    throw ConfigError("err1: field sizes do not match the grid");
  }
  double sum = 0.0;
  for (int i = 0; i < grid.n_cells; ++i) {
    sum += grid.volume[i + grid.begin()] * std::abs(q[i] - q_ref[i]);
  }
  return sum;
}

double relerr1(const std::vector<double>& q, const std::vector<double>& q_ref,
               const Grid1D& grid) {
  double norm = 0.0;
  for (int i = 0; i < grid.n_cells; ++i) {
    norm += grid.volume[i + grid.begin()] * std::abs(q_ref[i]);
  }
  return err1(q, q_ref, grid) / norm;
}

std::vector<double> restrict_interior(const std::vector<double>& fine, const Grid1D& fine_grid,
                                      int factor) {
  if (factor < 1 || fine_grid.n_cells % factor != 0) {
    throw ConfigError("restrict_interior: factor must divide the fine cell count");
  }
  const int nc = fine_grid.n_cells / factor;
  std::vector<double> coarse(nc);
  for (int i = 0; i < nc; ++i) {
    double vol = 0.0, sum = 0.0;
    for (int k = 0; k < factor; ++k) {
      const double v = fine_grid.volume[fine_grid.begin() + i * factor + k];
      vol += v;
      sum += v * fine[i * factor + k];
    }
    coarse[i] = sum / vol;
  }
  return coarse;
}

double crossing_time(const std::vector<ConsState>& u, const Grid1D& grid, const EosModel& eos) {
  double tau = 0.0;
  for (int c = grid.begin(); c < grid.end(); ++c) {
    const PrimState w = to_primitive(u[c], eos);
    tau += grid.dx / (std::abs(w.v) + eos.sound_speed(w.rho, w.p));
  }
  return tau;
}

std::vector<ConvergenceRow> convergence_table(const ProblemFactory& factory,
                                              const ConvergenceOptions& opt) {
  std::vector<double> ref_pressure;
  Grid1D ref_grid;
  if (opt.reference_n > 0) {
    Problem1D ref = factory(opt.reference_n, SchemeVariant::wellbalanced);
    EulerSolver1D solver = ref.make_solver();
    const RunReport rep = run(solver, ref.initial, ref.time);
    ref_pressure = interior_pressure(rep.final.u, ref.grid, ref.eos);
    ref_grid = ref.grid;
  }

  auto error_for = [&](int n, SchemeVariant v) {
    Problem1D prob = factory(n, v);
    EulerSolver1D solver = prob.make_solver();
    const std::vector<double> p0 = interior_pressure(prob.initial.u, prob.grid, prob.eos);
    const RunReport rep = run(solver, prob.initial, prob.time);
    const std::vector<double> p = interior_pressure(rep.final.u, prob.grid, prob.eos);
    if (opt.reference_n > 0) {
      if (opt.reference_n % n != 0) {
        throw ConfigError("convergence_table: reference_n must be a multiple of every n");
      }
      return err1(p, restrict_interior(ref_pressure, ref_grid, opt.reference_n / n), prob.grid);
    }
    return err1(p, p0, prob.grid);
  };

  // The ladder entries are independent runs; spread them over threads
  // (inner solver parallelism deactivates under nesting). Results do not
  // depend on the execution order.
  struct Task {
    int n;
    SchemeVariant variant;
    double err = 0.0;
  };
  std::vector<Task> tasks;
  for (int n : opt.n_values) {
    if (opt.run_standard) tasks.push_back({n, SchemeVariant::standard});
    if (opt.run_wellbalanced) tasks.push_back({n, SchemeVariant::wellbalanced});
  }
  // Start the expensive runs first.
  std::stable_sort(tasks.begin(), tasks.end(),
                   [](const Task& a, const Task& b) { return a.n > b.n; });
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
  for (int t = 0; t < static_cast<int>(tasks.size()); ++t) {
    try {
      tasks[t].err = error_for(tasks[t].n, tasks[t].variant);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  std::vector<ConvergenceRow> rows;
  rows.reserve(opt.n_values.size());
  for (std::size_t k = 0; k < opt.n_values.size(); ++k) {
    ConvergenceRow row;
    row.n = opt.n_values[k];
    for (const Task& t : tasks) {
      if (t.n != row.n) continue;
      (t.variant == SchemeVariant::standard ? row.err_std : row.err_wb) = t.err;
    }
    if (k > 0) {
      if (opt.run_standard) row.rate_std = std::log2(rows[k - 1].err_std / row.err_std);
      if (opt.run_wellbalanced) row.rate_wb = std::log2(rows[k - 1].err_wb / row.err_wb);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace wbflow
