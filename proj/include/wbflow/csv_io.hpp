#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wbflow/diagnostics.hpp"
#include "wbflow/grid.hpp"
#include "wbflow/state.hpp"

namespace wbflow {

// Snapshot writers: one row per interior cell, 17 significant digits.
// 1D header: x,rho,v,p. 2D header: x,y,rho,vx,vy,p.
void write_snapshot_csv(std::ostream& out, const Grid1D& grid, const std::vector<ConsState>& u,
                        const EosModel& eos);
void write_snapshot2d_csv(std::ostream& out, const Grid2D& grid,
                          const std::vector<ConsState2>& u, const EosModel& eos);

// Convergence table, header N,err_unbalanced,rate_unbalanced,err_wb,rate_wb.
// Rates on the coarsest row are left empty.
void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);

void write_file(const std::string& path, const std::string& contents);

}  // namespace wbflow
