#include "wbflow/reconstruction.hpp"

#include <algorithm>
#include <cmath>

namespace wbflow {

double minmod3(double a, double b, double c) {
  if (a > 0.0 && b > 0.0 && c > 0.0) return std::min(std::min(a, b), c);
  if (a < 0.0 && b < 0.0 && c < 0.0) return std::max(std::max(a, b), c);
  return 0.0;
}

double muscl_slope(double d_minus, double d_plus, double dx, const LimiterConfig& lim) {
  if (lim.order <= 1) return 0.0;
  return minmod3(lim.theta * d_minus / dx, (d_plus + d_minus) / (2.0 * dx),
                 lim.theta * d_plus / dx);
}

CellTraces standard_traces(const PrimState& wm, const PrimState& w, const PrimState& wp,
                           double dx, const LimiterConfig& lim) {
  CellTraces t{w, w, false};
  if (lim.order >= 2) {
    const double half = 0.5 * dx;
    const double s_rho = muscl_slope(w.rho - wm.rho, wp.rho - w.rho, dx, lim);
    const double s_v = muscl_slope(w.v - wm.v, wp.v - w.v, dx, lim);
    const double s_p = muscl_slope(w.p - wm.p, wp.p - w.p, dx, lim);
    t.left = {w.rho - s_rho * half, w.v - s_v * half, w.p - s_p * half};
    t.right = {w.rho + s_rho * half, w.v + s_v * half, w.p + s_p * half};
  }
  return t;
}

WbCellRecon wb_traces(const EquilibriumAnchor& anchor, const PrimState& wm, const PrimState& w,
                      const PrimState& wp, double x_m, double phi_m, double x_p, double phi_p,
                      double x_l, double phi_l, double x_r, double phi_r, double dx,
                      const LimiterConfig& lim, const EquilibriumOptions& eq_opt) {
  WbCellRecon out;
  const int count = lim.order >= 2 ? 4 : 2;
  const double xs[4] = {x_l, x_r, x_m, x_p};
  const double phis[4] = {phi_l, phi_r, phi_m, phi_p};
  PrimState eq[4];
  if (!profile_at_cell(anchor, count, xs, phis, eq_opt, eq)) {
    out.traces = standard_traces(wm, w, wp, dx, lim);
    out.traces.fallback = true;
    return out;
  }

  out.eq_left = eq[0];
  out.eq_right = eq[1];
  if (lim.order <= 1) {
    out.traces = {eq[0], eq[1], false};
    return out;
  }
  const PrimState dm{wm.rho - eq[2].rho, wm.v - eq[2].v, wm.p - eq[2].p};
  const PrimState dp{wp.rho - eq[3].rho, wp.v - eq[3].v, wp.p - eq[3].p};

  // Perturbation data are {dm, 0, dp}; the reconstruction vanishes at the
  // cell center by construction.
  const double half = 0.5 * dx;
  const double s_rho = muscl_slope(-dm.rho, dp.rho, dx, lim);
  const double s_v = muscl_slope(-dm.v, dp.v, dx, lim);
  const double s_p = muscl_slope(-dm.p, dp.p, dx, lim);
  out.traces.left = {eq[0].rho - s_rho * half, eq[0].v - s_v * half, eq[0].p - s_p * half};
  out.traces.right = {eq[1].rho + s_rho * half, eq[1].v + s_v * half, eq[1].p + s_p * half};
  out.traces.fallback = false;
  return out;
}

PrimState clip_trace(const PrimState& trace, const PrimState& wa, const PrimState& wb) {
  PrimState t = trace;
  t.rho = std::max(std::min(wa.rho, wb.rho), std::min(t.rho, std::max(wa.rho, wb.rho)));
  t.p = std::max(std::min(wa.p, wb.p), std::min(t.p, std::max(wa.p, wb.p)));
  return t;
}

}  // namespace wbflow
