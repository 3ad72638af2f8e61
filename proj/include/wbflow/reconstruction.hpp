#pragma once

#include "wbflow/equilibrium.hpp"
#include "wbflow/state.hpp"

namespace wbflow {

/// Generalized MinMod family: theta = 1 is classical MinMod, theta = 2 the
/// monotonized centered limiter. order = 1 disables slopes entirely.
struct LimiterConfig {
  double theta = 2.0;
  int order = 2;
};

// min of all arguments when all positive, max when all negative, else 0.
double minmod3(double a, double b, double c);

// Limited slope from the two one-sided differences of one variable.
double muscl_slope(double d_minus, double d_plus, double dx, const LimiterConfig& lim);

struct CellTraces {
  PrimState left;   // trace at the cell's left interface
  PrimState right;  // trace at the cell's right interface
  bool fallback = false;
};

// Piecewise-constant / limited-linear reconstruction of one cell.
CellTraces standard_traces(const PrimState& wm, const PrimState& w, const PrimState& wp,
                           double dx, const LimiterConfig& lim);

struct WbCellRecon {
  CellTraces traces;
  // Equilibrium profile values at the two interfaces; valid when no fallback
  // happened. The flux-difference source term reuses them.
  PrimState eq_left;
  PrimState eq_right;
};

// Equilibrium-preserving reconstruction: local profile plus a limited linear
// reconstruction of the perturbation, whose data are the neighbor deviations
// from this cell's extrapolated profile. Any failed profile evaluation makes
// the whole cell fall back to the standard reconstruction.
WbCellRecon wb_traces(const EquilibriumAnchor& anchor, const PrimState& wm, const PrimState& w,
                      const PrimState& wp, double x_m, double phi_m, double x_p, double phi_p,
                      double x_l, double phi_l, double x_r, double phi_r, double dx,
                      const LimiterConfig& lim, const EquilibriumOptions& eq_opt);

// Clamp density and pressure of a trace to the interval spanned by the two
// adjacent cell averages; velocity stays untouched.
PrimState clip_trace(const PrimState& trace, const PrimState& wa, const PrimState& wb);

}  // namespace wbflow
