#include "wbflow/source.hpp"

#include <stdexcept>

namespace wbflow {

SourceVector standard_gravity_source(const PrimState& w, double dphi) {
  return {-w.rho * dphi, -(w.rho * w.v) * dphi};
}

SourceVector standard_geometric_source(const PrimState& w, double area_l, double area_r,
                                       double inv_volume) {
  return {(area_r * w.p - area_l * w.p) * inv_volume, 0.0};
}

SourceVector wb_flux_difference_source(const PrimState& eq_l, const PrimState& eq_r,
                                       double area_l, double area_r, double inv_volume,
                                       const EosModel& eos) {
  const FluxVector fl = physical_flux(eq_l, eos);
  const FluxVector fr = physical_flux(eq_r, eos);
  return {(area_r * fr.mom - area_l * fl.mom) * inv_volume,
          (area_r * fr.energy - area_l * fl.energy) * inv_volume};
}

std::optional<SourceVector> wb_gravity_source_cartesian(const EquilibriumAnchor& a, double x_l,
                                                        double phi_l, double x_r, double phi_r,
                                                        double dx,
                                                        const EquilibriumOptions& opt) {
  if (a.alpha != 0) {
    throw std::invalid_argument("wb_gravity_source_cartesian: anchor must have alpha == 0");
  }
  const ProfileSample eql = profile_at(a, x_l, phi_l, opt);
  const ProfileSample eqr = profile_at(a, x_r, phi_r, opt);
  if (eql.outcome != EqOutcome::found || eqr.outcome != EqOutcome::found) return std::nullopt;
  return wb_flux_difference_source(eql.w, eqr.w, 1.0, 1.0, 1.0 / dx, a.eos);
}

std::optional<SourceVector> wb_source_curvilinear(const EquilibriumAnchor& a, const Grid1D& grid,
                                                  int cell, const Potential& phi,
                                                  const EquilibriumOptions& opt) {
  if (grid.alpha() == 0 || a.alpha == 0) {
    throw std::invalid_argument("wb_source_curvilinear: requires curvilinear geometry");
  }
  const double r_l = grid.iface[cell], r_r = grid.iface[cell + 1];
  const ProfileSample eql = profile_at(a, r_l, phi.phi(r_l), opt);
  const ProfileSample eqr = profile_at(a, r_r, phi.phi(r_r), opt);
  if (eql.outcome != EqOutcome::found || eqr.outcome != EqOutcome::found) return std::nullopt;
  return wb_flux_difference_source(eql.w, eqr.w, grid.area[cell], grid.area[cell + 1],
                                   grid.inv_volume[cell], a.eos);
}

std::optional<SourceVector2> wb_source_2d(const EquilibriumAnchor& ax,
                                          const EquilibriumAnchor& ay, double x_l, double phi_xl,
                                          double x_r, double phi_xr, double y_l, double phi_yl,
                                          double y_r, double phi_yr, double dx, double dy,
                                          const EquilibriumOptions& opt) {
  const auto sx = wb_gravity_source_cartesian(ax, x_l, phi_xl, x_r, phi_xr, dx, opt);
  const auto sy = wb_gravity_source_cartesian(ay, y_l, phi_yl, y_r, phi_yr, dy, opt);
  if (!sx || !sy) return std::nullopt;
  return SourceVector2{sx->mom, sy->mom, sx->energy + sy->energy};
}

}  // namespace wbflow
