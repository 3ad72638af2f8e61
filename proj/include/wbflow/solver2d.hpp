#pragma once

#include <cstdint>
#include <vector>

#include "wbflow/eos.hpp"
#include "wbflow/grid.hpp"
#include "wbflow/potential.hpp"
#include "wbflow/solver.hpp"
#include "wbflow/state.hpp"

namespace wbflow {

struct SolutionField2D {
  std::vector<ConsState2> u;  // (nx + 4) * (ny + 4), row-major, x fastest
  double t = 0.0;
};

struct Boundary2D {
  BcKind left = BcKind::frozen;
  BcKind right = BcKind::frozen;
  BcKind bottom = BcKind::frozen;
  BcKind top = BcKind::frozen;
};

/// Unsplit 2D Cartesian solver; reconstruction, fluxes and sources are
/// evaluated dimension by dimension. In each direction the equilibrium
/// profile is anchored with the transverse velocity zeroed, so the
/// transverse component is reconstructed by the standard limiter.
class EulerSolver2D {
 public:
  EulerSolver2D(Grid2D grid, EosModel eos, Potential2D phi, SchemeConfig scheme);

  const Grid2D& grid() const { return grid_; }
  const EosModel& eos() const { return eos_; }
  SchemeConfig& scheme() { return scheme_; }

  void set_boundary(const Boundary2D& bc, const std::vector<ConsState2>& initial);

  int idx(int i, int j) const { return j * grid_.nx_total() + i; }

  const std::vector<ConsState2>& spatial_operator(const std::vector<ConsState2>& u);
  double cfl_timestep(const std::vector<ConsState2>& u, double cfl) const;
  void fill_ghosts(std::vector<ConsState2>& u) const;
  void step(std::vector<ConsState2>& u, double dt, int rk_order);

  long fallback_count() const { return fallback_count_; }

 private:
  Grid2D grid_;
  EosModel eos_;
  Potential2D phi_;
  SchemeConfig scheme_;
  Boundary2D bc_;
  std::vector<ConsState2> frozen_;
  std::vector<ConsState2> rates_;
  std::vector<ConsState2> stage_;
  long fallback_count_ = 0;
};

}  // namespace wbflow
