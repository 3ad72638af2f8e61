#include "wbflow/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "wbflow/errors.hpp"

namespace wbflow {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_snapshot_csv(std::ostream& out, const Grid1D& grid, const std::vector<ConsState>& u,
                        const EosModel& eos) {
  out << "x,rho,v,p\n";
  for (int c = grid.begin(); c < grid.end(); ++c) {
    const PrimState w = to_primitive(u[c], eos);
    out << fmt(grid.center[c]) << ',' << fmt(w.rho) << ',' << fmt(w.v) << ',' << fmt(w.p)
        << '\n';
  }
}

void write_snapshot2d_csv(std::ostream& out, const Grid2D& grid,
                          const std::vector<ConsState2>& u, const EosModel& eos) {
  out << "x,y,rho,vx,vy,p\n";
  for (int j = Grid2D::n_ghost; j < Grid2D::n_ghost + grid.ny; ++j) {
    for (int i = Grid2D::n_ghost; i < Grid2D::n_ghost + grid.nx; ++i) {
      const PrimState2 w = to_primitive(u[j * grid.nx_total() + i], eos);
      out << fmt(grid.xc[i]) << ',' << fmt(grid.yc[j]) << ',' << fmt(w.rho) << ',' << fmt(w.vx)
          << ',' << fmt(w.vy) << ',' << fmt(w.p) << '\n';
    }
  }
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  out << "N,err_unbalanced,rate_unbalanced,err_wb,rate_wb\n";
  bool first = true;
  for (const ConvergenceRow& r : rows) {
    out << r.n << ',' << fmt(r.err_std) << ',';
    if (!first) out << fmt(r.rate_std);
    out << ',' << fmt(r.err_wb) << ',';
    if (!first) out << fmt(r.rate_wb);
    out << '\n';
    first = false;
  }
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file: " + path);
  out << contents;
}

}  // namespace wbflow
