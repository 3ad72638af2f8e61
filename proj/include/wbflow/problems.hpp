#pragma once

#include <string>
#include <vector>

#include "wbflow/grid.hpp"
#include "wbflow/potential.hpp"
#include "wbflow/solver.hpp"
#include "wbflow/solver2d.hpp"

namespace wbflow {

/// A fully assembled 1D experiment: mesh, physics, scheme, initial data and
/// run parameters.
struct Problem1D {
  std::string name;
  Grid1D grid;
  EosModel eos;
  Potential phi;
  SchemeConfig scheme;
  TimeConfig time;
  BcKind bc_left = BcKind::frozen;
  BcKind bc_right = BcKind::frozen;
  SolutionField initial;

  EulerSolver1D make_solver() const {
    EulerSolver1D s(grid, eos, phi, scheme);
    s.set_boundary(bc_left, bc_right, initial.u);
    return s;
  }
};

struct Problem2D {
  std::string name;
  Grid2D grid;
  EosModel eos;
  Potential2D phi;
  SchemeConfig scheme;
  TimeConfig time;
  Boundary2D bc;
  SolutionField2D initial;

  EulerSolver2D make_solver() const {
    EulerSolver2D s(grid, eos, phi, scheme);
    s.set_boundary(bc, initial.u);
    return s;
  }
};

// Steady flow under a linear potential on [0, 2] (gamma = 5/3), anchored at
// (rho, v, p) = (1, -M sqrt(gamma), 1) at x = 0, with an optional Gaussian
// pressure bump. mach 0 / 0.01 / 2.5 are the named regimes.
Problem1D make_gaussian_bump(double mach, double amplitude, int n, SchemeVariant variant);

// Spherical accretion onto a point mass on [0.2, 1.8] (gamma = 4/3), anchored
// at r0 = 1 with rho0 = 1, c0^2 = 1/2, v0 = -M c0. Initial data are chained
// cell-to-cell equilibrium extrapolations away from r0.
Problem1D make_bondi(double mach, double amplitude, int n, SchemeVariant variant);

// Large-amplitude variant: classical MinMod and a shorter end time.
Problem1D make_bondi_large(double mach, double amplitude, int n, SchemeVariant variant);

// Accretion profile with a stationary shock at r = 1 (pre-shock Mach 1.2),
// post-shock state from the Rankine-Hugoniot relations; needs even n.
Problem1D make_bondi_shock(int n, SchemeVariant variant);

// x-aligned steady flow extended uniformly in y on [0, 2] x [0, 1]; the
// multidimensional balance test.
Problem2D make_xaligned_flow_2d(double mach, int nx, int ny, SchemeVariant variant);

// Stationary Rankine-Hugoniot pair for a given pre-shock state.
struct ShockPair {
  PrimState pre, post;
};
ShockPair rankine_hugoniot_stationary(const PrimState& pre, double mach, const EosModel& eos);

std::vector<std::string> problem_names();

}  // namespace wbflow
