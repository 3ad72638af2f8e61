#pragma once

#include <optional>

#include "wbflow/equilibrium.hpp"
#include "wbflow/flux.hpp"
#include "wbflow/grid.hpp"
#include "wbflow/potential.hpp"
#include "wbflow/state.hpp"

namespace wbflow {

/// Cell-averaged source; the mass component is identically zero.
struct SourceVector {
  double mom = 0.0, energy = 0.0;
};

struct SourceVector2 {
  double momx = 0.0, momy = 0.0, energy = 0.0;
};

// Midpoint gravity source [0, -rho dphi, -rho v dphi].
SourceVector standard_gravity_source(const PrimState& w, double dphi);

// Pressure part of the curvilinear momentum source. Written as the same
// area-weighted difference the flux assembly uses, so resting uniform states
// cancel exactly.
SourceVector standard_geometric_source(const PrimState& w, double area_l, double area_r,
                                       double inv_volume);

// Well-balanced source in flux-difference form from the equilibrium profile
// evaluated at the two interfaces. Covers Cartesian (A = 1, |V| = dx) and
// curvilinear cells alike; combined with the flux difference it cancels
// exactly on steady data.
SourceVector wb_flux_difference_source(const PrimState& eq_l, const PrimState& eq_r,
                                       double area_l, double area_r, double inv_volume,
                                       const EosModel& eos);

// Convenience wrappers that evaluate the profile themselves. They return
// nothing when an interface profile cannot be solved; the caller is expected
// to fall back to the standard source (and reconstruction) for that cell.
std::optional<SourceVector> wb_gravity_source_cartesian(const EquilibriumAnchor& a, double x_l,
                                                        double phi_l, double x_r, double phi_r,
                                                        double dx,
                                                        const EquilibriumOptions& opt);

std::optional<SourceVector> wb_source_curvilinear(const EquilibriumAnchor& a, const Grid1D& grid,
                                                  int cell, const Potential& phi,
                                                  const EquilibriumOptions& opt);

// Dimension-by-dimension 2D source: each direction contributes its own 1D
// flux-difference form, with independently anchored profiles.
std::optional<SourceVector2> wb_source_2d(const EquilibriumAnchor& ax,
                                          const EquilibriumAnchor& ay, double x_l, double phi_xl,
                                          double x_r, double phi_xr, double y_l, double phi_yl,
                                          double y_r, double phi_yr, double dx, double dy,
                                          const EquilibriumOptions& opt);

}  // namespace wbflow
