#include "wbflow/solver.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>

#include "wbflow/errors.hpp"

namespace wbflow {

BcKind bc_kind_from_string(const std::string& s) {
  if (s == "frozen") return BcKind::frozen;
  if (s == "outflow") return BcKind::outflow;
  throw ConfigError("unknown boundary condition: " + s);
}

EulerSolver1D::EulerSolver1D(Grid1D grid, EosModel eos, Potential phi, SchemeConfig scheme)
    : grid_(std::move(grid)), eos_(eos), phi_(phi), scheme_(scheme) {
  const int nt = grid_.n_total();
  phi_center_.resize(nt);
  dphi_center_.resize(nt);
  phi_iface_.resize(nt + 1);
  for (int c = 0; c < nt; ++c) {
    phi_center_[c] = phi_.phi(grid_.center[c]);
    dphi_center_[c] = phi_.dphi(grid_.center[c]);
  }
  for (int c = 0; c <= nt; ++c) {
    phi_iface_[c] = phi_.phi(grid_.iface[c]);
  }
  prims_.resize(nt);
  trace_l_.resize(nt);
  trace_r_.resize(nt);
  eq_l_.resize(nt);
  eq_r_.resize(nt);
  fallback_.assign(nt, 0);
  flux_.resize(nt + 1);
  rates_.assign(nt, ConsState{});
  frozen_.assign(nt, ConsState{});
}

void EulerSolver1D::set_boundary(BcKind left, BcKind right,
                                 const std::vector<ConsState>& initial) {
  bc_left_ = left;
  bc_right_ = right;
  frozen_ = initial;
}

void EulerSolver1D::fill_ghosts(std::vector<ConsState>& u) const {
  const int ng = Grid1D::n_ghost;
  const int n = grid_.n_cells;
  if (bc_left_ == BcKind::frozen) {
    for (int c = 0; c < ng; ++c) u[c] = frozen_[c];
  } else {
    for (int c = 0; c < ng; ++c) u[c] = u[ng];
  }
  if (bc_right_ == BcKind::frozen) {
    for (int c = ng + n; c < ng + n + ng; ++c) u[c] = frozen_[c];
  } else {
    for (int c = ng + n; c < ng + n + ng; ++c) u[c] = u[ng + n - 1];
  }
}

const std::vector<ConsState>& EulerSolver1D::spatial_operator(const std::vector<ConsState>& u) {
  const int nt = grid_.n_total();
  const int i0 = grid_.begin(), i1 = grid_.end();
  const bool wb_recon = scheme_.recon == ReconScheme::wellbalanced;
  const bool wb_source = scheme_.source == SourceScheme::wellbalanced;

  // Primitives everywhere; admissibility is enforced on interior averages.
  bool bad = false;
#pragma omp parallel for schedule(static) reduction(|| : bad) if (nt > 2048)
  for (int c = 0; c < nt; ++c) {
    prims_[c] = to_primitive_unchecked(u[c], eos_);
    if (c >= i0 && c < i1 && !admissible(prims_[c], eos_)) bad = true;
  }
  if (bad) {
    throw StepError("inadmissible cell average in the interior");
  }

  // Traces (and equilibrium interface states) for interior cells plus one
  // ghost layer on each side.
  std::atomic<bool> failed{false};
  if (wb_recon) {
#pragma omp parallel for schedule(static) if (nt > 256)
    for (int c = i0 - 1; c < i1 + 1; ++c) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        const double xc = grid_.center[c];
        const EquilibriumAnchor anchor =
            make_anchor(prims_[c], xc, phi_center_[c], eos_, grid_.alpha());
        const WbCellRecon r = wb_traces(
            anchor, prims_[c - 1], prims_[c], prims_[c + 1], grid_.center[c - 1],
            phi_center_[c - 1], grid_.center[c + 1], phi_center_[c + 1], grid_.iface[c],
            phi_iface_[c], grid_.iface[c + 1], phi_iface_[c + 1], grid_.dx, scheme_.limiter,
            scheme_.eq);
        trace_l_[c] = r.traces.left;
        trace_r_[c] = r.traces.right;
        eq_l_[c] = r.eq_left;
        eq_r_[c] = r.eq_right;
        fallback_[c] = r.traces.fallback ? 1 : 0;
      } catch (...) {
        failed.store(true, std::memory_order_relaxed);
      }
    }
  } else {
    for (int c = i0 - 1; c < i1 + 1; ++c) {
      const CellTraces t =
          standard_traces(prims_[c - 1], prims_[c], prims_[c + 1], grid_.dx, scheme_.limiter);
      trace_l_[c] = t.left;
      trace_r_[c] = t.right;
      fallback_[c] = 0;
    }
  }
  if (failed.load()) {
    throw StepError("equilibrium reconstruction failed on inadmissible data");
  }

  if (scheme_.clip) {
#pragma omp parallel for schedule(static) if (nt > 2048)
    for (int c = i0 - 1; c < i1 + 1; ++c) {
      trace_l_[c] = clip_trace(trace_l_[c], prims_[c - 1], prims_[c]);
      trace_r_[c] = clip_trace(trace_r_[c], prims_[c], prims_[c + 1]);
    }
  }
  // Positivity floors on traces only; cell averages were checked above.
  const double p_floor = kPressureFloor - eos_.p_inf;
#pragma omp parallel for schedule(static) if (nt > 2048)
  for (int c = i0 - 1; c < i1 + 1; ++c) {
    trace_l_[c].rho = std::max(trace_l_[c].rho, kDensityFloor);
    trace_r_[c].rho = std::max(trace_r_[c].rho, kDensityFloor);
    trace_l_[c].p = std::max(trace_l_[c].p, p_floor);
    trace_r_[c].p = std::max(trace_r_[c].p, p_floor);
  }

  // One numerical flux per interface, shared by both adjacent cells.
#pragma omp parallel for schedule(static) if (nt > 512)
  for (int j = i0; j < i1 + 1; ++j) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      flux_[j] = riemann_flux(scheme_.flux, trace_r_[j - 1], trace_l_[j], eos_);
    } catch (...) {
      failed.store(true, std::memory_order_relaxed);
    }
  }
  if (failed.load()) {
    throw StepError("numerical flux evaluation failed");
  }

  long fb_count = 0;
#pragma omp parallel for schedule(static) reduction(+ : fb_count) if (nt > 2048)
  for (int c = i0; c < i1; ++c) {
    const double area_l = grid_.area[c], area_r = grid_.area[c + 1];
    const double inv_vol = grid_.inv_volume[c];
    ConsState rate{-(area_r * flux_[c + 1].mass - area_l * flux_[c].mass) * inv_vol,
                   -(area_r * flux_[c + 1].mom - area_l * flux_[c].mom) * inv_vol,
                   -(area_r * flux_[c + 1].energy - area_l * flux_[c].energy) * inv_vol};

    SourceVector s{};
    if (wb_source && wb_recon && !fallback_[c]) {
      s = wb_flux_difference_source(eq_l_[c], eq_r_[c], area_l, area_r, inv_vol, eos_);
    } else {
      const double dphi = scheme_.grad_phi == GradPhiMode::analytic
                              ? dphi_center_[c]
                              : (phi_iface_[c + 1] - phi_iface_[c]) / grid_.dx;
      s = standard_gravity_source(prims_[c], dphi);
      if (grid_.alpha() > 0) {
        const SourceVector geo = standard_geometric_source(prims_[c], area_l, area_r, inv_vol);
        s.mom += geo.mom;
      }
      fb_count += fallback_[c];
    }
    rate.mom += s.mom;
    rate.E += s.energy;
    rates_[c] = rate;
  }
  fallback_count_ = fb_count;
  return rates_;
}

double EulerSolver1D::cfl_timestep(const std::vector<ConsState>& u, double cfl) const {
  double dt_min = std::numeric_limits<double>::infinity();
  for (int c = grid_.begin(); c < grid_.end(); ++c) {
    const PrimState w = to_primitive_unchecked(u[c], eos_);
    const double c2 = eos_.gamma * (w.p + eos_.p_inf) / w.rho;
    const double speed = std::abs(w.v) + std::sqrt(c2);
    dt_min = std::min(dt_min, grid_.dx / speed);
  }
  const double dt = cfl * dt_min;
  if (!std::isfinite(dt) || !(dt > 0.0)) {
    throw StepError("CFL time step is not finite and positive");
  }
  return dt;
}

void EulerSolver1D::step(std::vector<ConsState>& u, double dt, int rk_order) {
  ssprk_step_impl(
      u, dt, rk_order, [this](const std::vector<ConsState>& v) { return spatial_operator(v); },
      [this](std::vector<ConsState>& v) { fill_ghosts(v); }, stage_);
}

FluxVector EulerSolver1D::boundary_flux_left() const { return flux_[grid_.begin()]; }

FluxVector EulerSolver1D::boundary_flux_right() const { return flux_[grid_.end()]; }

RunReport run(EulerSolver1D& solver, SolutionField initial, const TimeConfig& time) {
  const auto wall_start = std::chrono::steady_clock::now();
  RunReport report;
  SolutionField field = std::move(initial);

  std::size_t next_output = 0;
  auto record_due = [&](double t) {
    while (next_output < time.output_times.size() && t >= time.output_times[next_output]) {
      report.snapshots.emplace_back(t, field.u);
      ++next_output;
    }
  };
  record_due(field.t);

  while (field.t < time.t_end) {
    double dt = solver.cfl_timestep(field.u, time.cfl);
    const bool last = field.t + dt >= time.t_end;
    if (last) dt = time.t_end - field.t;  // hit t_end exactly
    solver.step(field.u, dt, time.rk_order);
    field.t = last ? time.t_end : field.t + dt;
    ++report.steps;
    report.fallback_cell_stages += solver.fallback_count();
    record_due(field.t);
  }

  report.final = std::move(field);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
  return report;
}

}  // namespace wbflow
