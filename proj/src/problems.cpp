#include "wbflow/problems.hpp"

#include <cmath>

#include "wbflow/equilibrium.hpp"
#include "wbflow/errors.hpp"

namespace wbflow {

namespace {

double gaussian(double x, double center, double sigma) {
  const double d = x - center;
  return std::exp(-d * d / (sigma * sigma));
}

// Sample one anchored profile at every padded cell center.
std::vector<PrimState> sample_profile(const EquilibriumAnchor& anchor, const Grid1D& grid,
                                      const Potential& phi, const EquilibriumOptions& opt) {
  std::vector<PrimState> w(grid.n_total());
  for (int c = 0; c < grid.n_total(); ++c) {
    const double x = grid.center[c];
    const ProfileSample s = profile_at(anchor, x, phi.phi(x), opt);
    if (s.outcome != EqOutcome::found) {
      throw StepError("profile setup failed at x = " + std::to_string(x));
    }
    w[c] = s.w;
  }
  return w;
}

// Chained extrapolation: each solve is anchored at the previously filled
// neighbor, walking outward from the cell range nearest x0.
void chain_from(std::vector<PrimState>& w, const Grid1D& grid, const Potential& phi,
                const EosModel& eos, const EquilibriumOptions& opt,
                const EquilibriumAnchor& base, int first, int last, int dir) {
  EquilibriumAnchor cur = base;
  for (int c = first; c != last; c += dir) {
    const double x = grid.center[c];
    const ProfileSample s = profile_at(cur, x, phi.phi(x), opt);
    if (s.outcome != EqOutcome::found) {
      throw StepError("chained profile setup failed at r = " + std::to_string(x));
    }
    w[c] = s.w;
    cur = make_anchor(s.w, x, phi.phi(x), eos, grid.alpha());
  }
}

SolutionField to_field(const std::vector<PrimState>& w, const EosModel& eos) {
  SolutionField f;
  f.u.resize(w.size());
  for (std::size_t c = 0; c < w.size(); ++c) f.u[c] = to_conserved(w[c], eos);
  return f;
}

}  // namespace

Problem1D make_gaussian_bump(double mach, double amplitude, int n, SchemeVariant variant) {
  Problem1D p;
  p.name = "gaussian_bump";
  p.grid = build_grid_1d(Geometry::cartesian, 0.0, 2.0, n);
  p.eos = EosModel::ideal(5.0 / 3.0);
  p.phi = Potential::linear(1.0);
  p.scheme.flux = FluxKind::hllc;
  p.scheme.limiter = {2.0, 2};
  p.scheme.set_variant(variant);

  const double c0 = std::sqrt(p.eos.gamma);
  const PrimState w0{1.0, -mach * c0, 1.0};
  const EquilibriumAnchor anchor = make_anchor(w0, 0.0, p.phi.phi(0.0), p.eos, 0);
  std::vector<PrimState> w = sample_profile(anchor, p.grid, p.phi, p.scheme.eq);

  if (amplitude != 0.0) {
    const double center = mach == 0.0 ? 1.0 : (mach < 1.0 ? 1.1 : 1.5);
    for (int c = 0; c < p.grid.n_total(); ++c) {
      w[c].p += amplitude * gaussian(p.grid.center[c], center, 0.1);
    }
  }
  p.initial = to_field(w, p.eos);

  p.time.cfl = 0.45;
  p.time.rk_order = 2;
  p.time.t_end = amplitude == 0.0 ? (mach < 1.0 ? 4.0 : 1.0) : (mach < 1.0 ? 0.45 : 0.25);
  return p;
}

namespace {

Problem1D make_bondi_base(double mach, double amplitude, int n) {
  Problem1D p;
  p.name = "bondi";
  p.grid = build_grid_1d(Geometry::spherical, 0.2, 1.8, n);
  p.eos = EosModel::ideal(4.0 / 3.0);
  p.phi = Potential::point_mass(1.0);
  p.scheme.flux = FluxKind::hllc;
  p.scheme.limiter = {2.0, 2};

  const double c0 = std::sqrt(0.5);
  const double p0 = 0.5 / p.eos.gamma;  // rho0 c0^2 / gamma
  const PrimState w0{1.0, -mach * c0, p0};
  const double r0 = 1.0;
  const EquilibriumAnchor anchor = make_anchor(w0, r0, p.phi.phi(r0), p.eos, 2);

  // Extrapolate from r0 to the nearest centers, then walk cell to cell.
  std::vector<PrimState> w(p.grid.n_total());
  int below = -1;
  for (int c = 0; c < p.grid.n_total(); ++c) {
    if (p.grid.center[c] < r0) below = c;
  }
  if (below < 0 || below + 1 >= p.grid.n_total()) {
    throw ConfigError("bondi: reference point outside the grid");
  }
  chain_from(w, p.grid, p.phi, p.eos, p.scheme.eq, anchor, below, -1, -1);
  chain_from(w, p.grid, p.phi, p.eos, p.scheme.eq, anchor, below + 1, p.grid.n_total(), +1);

  if (amplitude != 0.0) {
    const double center = 0.4 * 0.2 + 0.6 * 1.8;
    for (int c = 0; c < p.grid.n_total(); ++c) {
      w[c].p += amplitude * gaussian(p.grid.center[c], center, 0.08);
    }
  }
  p.initial = to_field(w, p.eos);

  p.time.cfl = 0.45;
  p.time.rk_order = 2;
  const double v0 = mach * c0;
  p.time.t_end = 0.5 * std::min(0.6 * 1.6 / (c0 + v0), 0.3 * 1.6 / std::max(c0 - v0, 1e-10));
  return p;
}

}  // namespace

Problem1D make_bondi(double mach, double amplitude, int n, SchemeVariant variant) {
  Problem1D p = make_bondi_base(mach, amplitude, n);
  p.scheme.set_variant(variant);
  if (amplitude == 0.0) p.time.t_end = 4.0;
  return p;
}

Problem1D make_bondi_large(double mach, double amplitude, int n, SchemeVariant variant) {
  Problem1D p = make_bondi_base(mach, amplitude, n);
  p.name = "bondi_large";
  p.scheme.limiter = {1.0, 2};
  p.scheme.set_variant(variant);
  const double c0 = std::sqrt(0.5);
  const double v0 = mach * c0;
  p.time.t_end = 0.08 * std::min(0.6 * 1.6 / (c0 + v0), 0.3 * 1.6 / std::max(c0 - v0, 1e-10));
  return p;
}

ShockPair rankine_hugoniot_stationary(const PrimState& pre, double mach, const EosModel& eos) {
  const double g = eos.gamma;
  const double m2 = mach * mach;
  ShockPair s;
  s.pre = pre;
  s.post.rho = pre.rho * ((g + 1.0) * m2) / ((g - 1.0) * m2 + 2.0);
  s.post.p = pre.p * (2.0 * g * m2 / (g + 1.0) - (g - 1.0) / (g + 1.0));
  s.post.v = pre.rho / s.post.rho * pre.v;
  return s;
}

Problem1D make_bondi_shock(int n, SchemeVariant variant) {
  if (n % 2 != 0) {
    throw ConfigError("bondi_shock: the cell count must be even so the shock sits on a face");
  }
  Problem1D p;
  p.name = "bondi_shock";
  p.grid = build_grid_1d(Geometry::spherical, 0.2, 1.8, n);
  p.eos = EosModel::ideal(4.0 / 3.0);
  p.phi = Potential::point_mass(1.0);
  p.scheme.flux = FluxKind::hlle;
  p.scheme.limiter = {1.0, 2};
  p.scheme.clip = true;
  p.scheme.set_variant(variant);

  const double mach = 1.2;
  const double c0 = std::sqrt(0.5);
  const PrimState pre{1.0, -mach * c0, 0.5 / p.eos.gamma};
  const ShockPair rh = rankine_hugoniot_stationary(pre, mach, p.eos);

  const double r0 = 1.0;
  const EquilibriumAnchor a_pre = make_anchor(rh.pre, r0, p.phi.phi(r0), p.eos, 2);
  const EquilibriumAnchor a_post = make_anchor(rh.post, r0, p.phi.phi(r0), p.eos, 2);

  std::vector<PrimState> w(p.grid.n_total());
  int below = -1;
  for (int c = 0; c < p.grid.n_total(); ++c) {
    if (p.grid.center[c] < r0) below = c;
  }
  chain_from(w, p.grid, p.phi, p.eos, p.scheme.eq, a_post, below, -1, -1);
  chain_from(w, p.grid, p.phi, p.eos, p.scheme.eq, a_pre, below + 1, p.grid.n_total(), +1);
  p.initial = to_field(w, p.eos);

  p.time.cfl = 0.45;
  p.time.rk_order = 2;
  p.time.t_end = 2.0;
  return p;
}

Problem2D make_xaligned_flow_2d(double mach, int nx, int ny, SchemeVariant variant) {
  Problem2D p;
  p.name = "xaligned2d";
  p.grid = build_grid_2d(0.0, 2.0, nx, 0.0, 1.0, ny);
  p.eos = EosModel::ideal(5.0 / 3.0);
  p.phi = {Potential::linear(1.0), Potential::constant()};
  p.scheme.flux = FluxKind::hllc;
  p.scheme.limiter = {2.0, 2};
  p.scheme.set_variant(variant);
  p.time.cfl = 0.45;
  p.time.rk_order = 2;

  const double c0 = std::sqrt(p.eos.gamma);
  const PrimState w0{1.0, -mach * c0, 1.0};
  const EquilibriumAnchor anchor = make_anchor(w0, 0.0, 0.0, p.eos, 0);

  std::vector<PrimState> line(p.grid.nx_total());
  EquilibriumOptions opt;
  for (int i = 0; i < p.grid.nx_total(); ++i) {
    const double x = p.grid.xc[i];
    const ProfileSample s = profile_at(anchor, x, p.phi.px.phi(x), opt);
    if (s.outcome != EqOutcome::found) {
      throw StepError("2D profile setup failed at x = " + std::to_string(x));
    }
    line[i] = s.w;
  }
  p.initial.u.resize(p.grid.nx_total() * p.grid.ny_total());
  for (int j = 0; j < p.grid.ny_total(); ++j) {
    for (int i = 0; i < p.grid.nx_total(); ++i) {
      const PrimState2 w2{line[i].rho, line[i].v, 0.0, line[i].p};
      p.initial.u[j * p.grid.nx_total() + i] = to_conserved(w2, p.eos);
    }
  }
  return p;
}

std::vector<std::string> problem_names() {
  return {"gaussian_bump", "bondi", "bondi_large", "bondi_shock", "xaligned2d"};
}

}  // namespace wbflow
