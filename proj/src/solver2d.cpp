#include "wbflow/solver2d.hpp"

#include <atomic>
#include <cmath>
#include <limits>

#include "wbflow/equilibrium.hpp"
#include "wbflow/errors.hpp"
#include "wbflow/flux.hpp"
#include "wbflow/reconstruction.hpp"
#include "wbflow/source.hpp"

namespace wbflow {

namespace {

// Per-line scratch for one directional sweep.
struct SweepBuffers {
  std::vector<PrimState2> w;        // states along the line (normal velocity in vx)
  std::vector<PrimState2> tl, tr;   // traces at the left/right face of each cell
  std::vector<PrimState> eq_l, eq_r;
  std::vector<std::uint8_t> fb;
  std::vector<FluxVector2> flux;

  void resize(int n) {
    w.resize(n);
    tl.resize(n);
    tr.resize(n);
    eq_l.resize(n);
    eq_r.resize(n);
    fb.assign(n, 0);
    flux.resize(n + 1);
  }
};

inline PrimState normal_part(const PrimState2& w) { return {w.rho, w.vx, w.p}; }

}  // namespace

EulerSolver2D::EulerSolver2D(Grid2D grid, EosModel eos, Potential2D phi, SchemeConfig scheme)
    : grid_(grid), eos_(eos), phi_(phi), scheme_(scheme) {
  const int n = grid_.nx_total() * grid_.ny_total();
  rates_.assign(n, ConsState2{});
  frozen_.assign(n, ConsState2{});
}

void EulerSolver2D::set_boundary(const Boundary2D& bc, const std::vector<ConsState2>& initial) {
  bc_ = bc;
  frozen_ = initial;
}

void EulerSolver2D::fill_ghosts(std::vector<ConsState2>& u) const {
  const int ng = Grid2D::n_ghost;
  const int nxt = grid_.nx_total(), nyt = grid_.ny_total();
  for (int j = ng; j < ng + grid_.ny; ++j) {
    for (int g = 0; g < ng; ++g) {
      u[idx(g, j)] = bc_.left == BcKind::frozen ? frozen_[idx(g, j)] : u[idx(ng, j)];
      const int r = nxt - 1 - g;
      u[idx(r, j)] = bc_.right == BcKind::frozen ? frozen_[idx(r, j)] : u[idx(ng + grid_.nx - 1, j)];
    }
  }
  for (int i = ng; i < ng + grid_.nx; ++i) {
    for (int g = 0; g < ng; ++g) {
      u[idx(i, g)] = bc_.bottom == BcKind::frozen ? frozen_[idx(i, g)] : u[idx(i, ng)];
      const int t = nyt - 1 - g;
      u[idx(i, t)] = bc_.top == BcKind::frozen ? frozen_[idx(i, t)] : u[idx(i, ng + grid_.ny - 1)];
    }
  }
}

const std::vector<ConsState2>& EulerSolver2D::spatial_operator(const std::vector<ConsState2>& u) {
  const int ng = Grid2D::n_ghost;
  const int nxt = grid_.nx_total(), nyt = grid_.ny_total();
  const bool wb = scheme_.recon == ReconScheme::wellbalanced;
  const bool wb_src = scheme_.source == SourceScheme::wellbalanced;

  for (auto& r : rates_) r = ConsState2{};

  for (int j = ng; j < ng + grid_.ny; ++j) {
    for (int i = ng; i < ng + grid_.nx; ++i) {
      if (!admissible(to_primitive_unchecked(u[idx(i, j)], eos_), eos_)) {
        throw StepError("inadmissible cell average in 2D field");
      }
    }
  }

  std::atomic<bool> failed{false};
  std::atomic<long> fb_total{0};
  const double p_floor = kPressureFloor - eos_.p_inf;

  // x sweep: one line per interior row.
#pragma omp parallel
  {
    SweepBuffers b;
    b.resize(nxt);
#pragma omp for schedule(static)
    for (int j = ng; j < ng + grid_.ny; ++j) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        const double y = grid_.yc[j];
        const double phi_y = phi_.py.phi(y);
        for (int i = 0; i < nxt; ++i) b.w[i] = to_primitive_unchecked(u[idx(i, j)], eos_);
        for (int i = 1; i < nxt - 1; ++i) {
          const PrimState2 &wm2 = b.w[i - 1], &w2 = b.w[i], &wp2 = b.w[i + 1];
          // Transverse velocity: standard limited reconstruction.
          const double s_vt =
              muscl_slope(w2.vy - wm2.vy, wp2.vy - w2.vy, grid_.dx, scheme_.limiter);
          const double vt_l = w2.vy - s_vt * 0.5 * grid_.dx;
          const double vt_r = w2.vy + s_vt * 0.5 * grid_.dx;
          CellTraces t;
          if (wb) {
            const double xc = grid_.xc[i];
            const double xm = grid_.xc[i - 1], xp = grid_.xc[i + 1];
            const double xl = grid_.xf[i], xr = grid_.xf[i + 1];
            const EquilibriumAnchor anchor =
                make_anchor(normal_part(w2), xc, phi_.px.phi(xc) + phi_y, eos_, 0);
            const WbCellRecon r = wb_traces(
                anchor, normal_part(wm2), normal_part(w2), normal_part(wp2), xm,
                phi_.px.phi(xm) + phi_y, xp, phi_.px.phi(xp) + phi_y, xl,
                phi_.px.phi(xl) + phi_y, xr, phi_.px.phi(xr) + phi_y, grid_.dx,
                scheme_.limiter, scheme_.eq);
            t = r.traces;
            b.eq_l[i] = r.eq_left;
            b.eq_r[i] = r.eq_right;
            b.fb[i] = t.fallback ? 1 : 0;
          } else {
            t = standard_traces(normal_part(wm2), normal_part(w2), normal_part(wp2), grid_.dx,
                                scheme_.limiter);
            b.fb[i] = 0;
          }
          if (scheme_.clip) {
            t.left = clip_trace(t.left, normal_part(wm2), normal_part(w2));
            t.right = clip_trace(t.right, normal_part(w2), normal_part(wp2));
          }
          b.tl[i] = {std::max(t.left.rho, kDensityFloor), t.left.v, vt_l,
                     std::max(t.left.p, p_floor)};
          b.tr[i] = {std::max(t.right.rho, kDensityFloor), t.right.v, vt_r,
                     std::max(t.right.p, p_floor)};
        }
        for (int i = ng; i < ng + grid_.nx + 1; ++i) {
          b.flux[i] = riemann_flux_normal(scheme_.flux, b.tr[i - 1], b.tl[i], eos_);
        }
        const double inv_dx = 1.0 / grid_.dx;
        for (int i = ng; i < ng + grid_.nx; ++i) {
          ConsState2& rate = rates_[idx(i, j)];
          rate.rho -= (b.flux[i + 1].mass - b.flux[i].mass) * inv_dx;
          rate.momx -= (b.flux[i + 1].momn - b.flux[i].momn) * inv_dx;
          rate.momy -= (b.flux[i + 1].momt - b.flux[i].momt) * inv_dx;
          rate.E -= (b.flux[i + 1].energy - b.flux[i].energy) * inv_dx;
          SourceVector s{};
          if (wb_src && wb && !b.fb[i]) {
            s = wb_flux_difference_source(b.eq_l[i], b.eq_r[i], 1.0, 1.0, inv_dx, eos_);
          } else {
            const double dphi = phi_.dphi_dx(grid_.xc[i]);
            s = standard_gravity_source(normal_part(b.w[i]), dphi);
            fb_total += b.fb[i];
          }
          rate.momx += s.mom;
          rate.E += s.energy;
        }
      } catch (...) {
        failed.store(true, std::memory_order_relaxed);
      }
    }
  }
  if (failed.load()) throw StepError("2D x-sweep failed");

  // y sweep: one line per interior column; vy acts as the normal velocity.
#pragma omp parallel
  {
    SweepBuffers b;
    b.resize(nyt);
#pragma omp for schedule(static)
    for (int i = ng; i < ng + grid_.nx; ++i) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        const double x = grid_.xc[i];
        const double phi_x = phi_.px.phi(x);
        for (int j = 0; j < nyt; ++j) {
          const PrimState2 w = to_primitive_unchecked(u[idx(i, j)], eos_);
          b.w[j] = {w.rho, w.vy, w.vx, w.p};  // swap roles: vy is normal
        }
        for (int j = 1; j < nyt - 1; ++j) {
          const PrimState2 &wm2 = b.w[j - 1], &w2 = b.w[j], &wp2 = b.w[j + 1];
          const double s_vt =
              muscl_slope(w2.vy - wm2.vy, wp2.vy - w2.vy, grid_.dy, scheme_.limiter);
          const double vt_l = w2.vy - s_vt * 0.5 * grid_.dy;
          const double vt_r = w2.vy + s_vt * 0.5 * grid_.dy;
          CellTraces t;
          if (wb) {
            const double yc = grid_.yc[j];
            const double ym = grid_.yc[j - 1], yp = grid_.yc[j + 1];
            const double yl = grid_.yf[j], yr = grid_.yf[j + 1];
            const EquilibriumAnchor anchor =
                make_anchor(normal_part(w2), yc, phi_.py.phi(yc) + phi_x, eos_, 0);
            const WbCellRecon r = wb_traces(
                anchor, normal_part(wm2), normal_part(w2), normal_part(wp2), ym,
                phi_.py.phi(ym) + phi_x, yp, phi_.py.phi(yp) + phi_x, yl,
                phi_.py.phi(yl) + phi_x, yr, phi_.py.phi(yr) + phi_x, grid_.dy,
                scheme_.limiter, scheme_.eq);
            t = r.traces;
            b.eq_l[j] = r.eq_left;
            b.eq_r[j] = r.eq_right;
            b.fb[j] = t.fallback ? 1 : 0;
          } else {
            t = standard_traces(normal_part(wm2), normal_part(w2), normal_part(wp2), grid_.dy,
                                scheme_.limiter);
            b.fb[j] = 0;
          }
          if (scheme_.clip) {
            t.left = clip_trace(t.left, normal_part(wm2), normal_part(w2));
            t.right = clip_trace(t.right, normal_part(w2), normal_part(wp2));
          }
          b.tl[j] = {std::max(t.left.rho, kDensityFloor), t.left.v, vt_l,
                     std::max(t.left.p, p_floor)};
          b.tr[j] = {std::max(t.right.rho, kDensityFloor), t.right.v, vt_r,
                     std::max(t.right.p, p_floor)};
        }
        for (int j = ng; j < ng + grid_.ny + 1; ++j) {
          b.flux[j] = riemann_flux_normal(scheme_.flux, b.tr[j - 1], b.tl[j], eos_);
        }
        const double inv_dy = 1.0 / grid_.dy;
        for (int j = ng; j < ng + grid_.ny; ++j) {
          ConsState2& rate = rates_[idx(i, j)];
          rate.rho -= (b.flux[j + 1].mass - b.flux[j].mass) * inv_dy;
          rate.momy -= (b.flux[j + 1].momn - b.flux[j].momn) * inv_dy;
          rate.momx -= (b.flux[j + 1].momt - b.flux[j].momt) * inv_dy;
          rate.E -= (b.flux[j + 1].energy - b.flux[j].energy) * inv_dy;
          SourceVector s{};
          if (wb_src && wb && !b.fb[j]) {
            s = wb_flux_difference_source(b.eq_l[j], b.eq_r[j], 1.0, 1.0, inv_dy, eos_);
          } else {
            const double dphi = phi_.dphi_dy(grid_.yc[j]);
            s = standard_gravity_source(normal_part(b.w[j]), dphi);
            fb_total += b.fb[j];
          }
          rate.momy += s.mom;
          rate.E += s.energy;
        }
      } catch (...) {
        failed.store(true, std::memory_order_relaxed);
      }
    }
  }
  if (failed.load()) throw StepError("2D y-sweep failed");

  fallback_count_ = fb_total.load();
  return rates_;
}

double EulerSolver2D::cfl_timestep(const std::vector<ConsState2>& u, double cfl) const {
  const int ng = Grid2D::n_ghost;
  double dt_min = std::numeric_limits<double>::infinity();
  for (int j = ng; j < ng + grid_.ny; ++j) {
    for (int i = ng; i < ng + grid_.nx; ++i) {
      const PrimState2 w = to_primitive_unchecked(u[idx(i, j)], eos_);
      const double c = std::sqrt(eos_.gamma * (w.p + eos_.p_inf) / w.rho);
      dt_min = std::min(dt_min, grid_.dx / (std::abs(w.vx) + c));
      dt_min = std::min(dt_min, grid_.dy / (std::abs(w.vy) + c));
    }
  }
  const double dt = cfl * dt_min;
  if (!std::isfinite(dt) || !(dt > 0.0)) {
    throw StepError("CFL time step is not finite and positive");
  }
  return dt;
}

void EulerSolver2D::step(std::vector<ConsState2>& u, double dt, int rk_order) {
  ssprk_step_impl(
      u, dt, rk_order, [this](const std::vector<ConsState2>& v) { return spatial_operator(v); },
      [this](std::vector<ConsState2>& v) { fill_ghosts(v); }, stage_);
}

}  // namespace wbflow
