#include "wbflow/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wbflow {

namespace {

double r_pow_2alpha(int alpha, double r) {
  if (alpha == 0) return 1.0;
  const double r2 = r * r;
  return alpha == 1 ? r2 : r2 * r2;
}

// e(rho) = m2loc/(2 rho^2) + h_coef rho^(gamma-1) at a fixed location, with
// m2loc = m0^2 / r^(2 alpha). One pow evaluates both e and e'.
struct FluidEnergyFn {
  double m2loc, h_coef, c2_coef, gm1;

  void eval(double rho, double& e, double& de, double& q) const {
    q = std::pow(rho, gm1);
    eval_given(rho, q, e, de);
  }

  void eval_given(double rho, double q, double& e, double& de) const {
    const double r2 = rho * rho;
    e = 0.5 * m2loc / r2 + h_coef * q;
    de = c2_coef * q / rho - m2loc / (r2 * rho);
  }

  double deriv(double rho) const {
    const double q = std::pow(rho, gm1);
    return c2_coef * q / rho - m2loc / (rho * rho * rho);
  }
};

FluidEnergyFn make_energy_fn(const EquilibriumAnchor& a, double r) {
  const double g = a.eos.gamma;
  return {a.m0 * a.m0 / r_pow_2alpha(a.alpha, r), g / (g - 1.0) * a.k0, g * a.k0, g - 1.0};
}

void check_radius(const EquilibriumAnchor& a, double r) {
  if (a.alpha > 0 && !(r > 0.0)) {
    throw std::domain_error("equilibrium: curvilinear profile needs r > 0");
  }
}

}  // namespace

EquilibriumAnchor make_anchor(const PrimState& w0, double x0, double phi0, const EosModel& eos,
                              int alpha) {
  if (alpha < 0 || alpha > 2) {
    throw std::domain_error("equilibrium: alpha must be 0, 1 or 2");
  }
  if (!std::isfinite(w0.v) || !std::isfinite(x0) || !std::isfinite(phi0)) {
    throw std::domain_error("equilibrium: anchor inputs must be finite");
  }
  if (alpha > 0 && !(x0 > 0.0)) {
    throw std::domain_error("equilibrium: curvilinear anchor needs x0 > 0");
  }

  EquilibriumAnchor a;
  a.eos = eos;
  a.alpha = alpha;
  a.x0 = x0;
  a.phi0 = phi0;
  a.rho0 = w0.rho;
  a.v0 = w0.v;
  a.p0 = w0.p;
  if (!(w0.rho >= kDensityFloor) || !(w0.p + eos.p_inf >= kPressureFloor) ||
      !std::isfinite(w0.rho) || !std::isfinite(w0.p)) {
    throw std::domain_error("equilibrium: inadmissible anchor state");
  }
  // One isentrope power serves K, h and the anchor's fluid energy. The energy
  // expression matches FluidEnergyFn::eval exactly, so the residual of a
  // density solve at the anchor itself is exactly zero.
  const double q0 = std::pow(w0.rho, eos.gamma - 1.0);
  a.q0 = q0;
  a.k0 = (w0.p + eos.p_inf) / (q0 * w0.rho);
  const double ra = alpha == 0 ? 1.0 : (alpha == 1 ? x0 : x0 * x0);
  a.m0 = ra * w0.rho * w0.v;
  const double m2loc = a.m0 * a.m0 / r_pow_2alpha(alpha, x0);
  const double r2 = w0.rho * w0.rho;
  a.e_anchor = 0.5 * m2loc / r2 + eos.gamma / (eos.gamma - 1.0) * a.k0 * q0;
  a.be0 = a.e_anchor + phi0;

  const double c0 = std::sqrt(eos.gamma * (w0.p + eos.p_inf) / w0.rho);
  const double av = std::abs(w0.v);
  a.regime = av == c0 ? FlowRegime::sonic
                      : (av < c0 ? FlowRegime::subsonic : FlowRegime::supersonic);

  if (a.m0 != 0.0) {
    const CriticalState cs = critical_state(a, x0);
    a.rho_star0 = cs.rho_star;
    a.e_star0 = cs.e_star;
  }
  return a;
}

double fluid_energy(const EquilibriumAnchor& a, double rho, double r) {
  if (!(rho > 0.0)) throw std::domain_error("fluid_energy: rho must be > 0");
  check_radius(a, r);
  double e, de, q;
  make_energy_fn(a, r).eval(rho, e, de, q);
  return e;
}

double fluid_energy_deriv(const EquilibriumAnchor& a, double rho, double r) {
  if (!(rho > 0.0)) throw std::domain_error("fluid_energy_deriv: rho must be > 0");
  check_radius(a, r);
  return make_energy_fn(a, r).deriv(rho);
}

CriticalState critical_state(const EquilibriumAnchor& a, double r) {
  if (a.m0 == 0.0) return {0.0, 0.0};
  check_radius(a, r);
  const double g = a.eos.gamma;
  const double m2loc = a.m0 * a.m0 / r_pow_2alpha(a.alpha, r);
  const double rho_star = std::pow(m2loc / (g * a.k0), 1.0 / (g + 1.0));
  const double h_star = g / (g - 1.0) * a.k0 * std::pow(rho_star, g - 1.0);
  const double e_star = 0.5 * m2loc / (rho_star * rho_star) + h_star;
  return {rho_star, e_star};
}

Existence classify_existence(const EquilibriumAnchor& a, double phi, double r) {
  const double target = a.be0 - phi;
  if (a.m0 == 0.0) {
    // e(rho) = h(rho) decreases monotonically to 0 as rho -> 0.
    return target > 0.0 ? Existence::unique : Existence::none;
  }
  const CriticalState cs = critical_state(a, r);
  if (target < cs.e_star) return Existence::none;
  if (target == cs.e_star) return Existence::unique;
  return Existence::two_branches;
}

double curvilinear_initial_guess(const EquilibriumAnchor& a, double r) {
  if (a.m0 == 0.0 || a.alpha == 0) return a.rho0;
  return a.rho0 / a.rho_star0 * critical_state(a, r).rho_star;
}

namespace {

// Guarded hybrid Newton core; existence has already been established. Sonic
// anchors are guarded as subsonic; the root coincides with rho_star.
DensitySolve newton_ideal(const FluidEnergyFn& f, double target, double tol_abs,
                          double res_floor, double rho_star, bool supersonic, double rho,
                          double q_seed, int max_iter) {
  auto guarded_step = [&](double rho_k, double res, double de) {
    double trial = rho_k - res / de;
    if (!supersonic) {
      if (trial < rho_star) trial = 0.5 * (rho_star + rho_k);
    } else {
      if (trial > rho_star) trial = 0.5 * (rho_k + rho_star);
    }
    if (trial < 0.0) trial = 0.5 * rho_k;
    return trial;
  };
  for (int k = 0;; ++k) {
    double e, de, q;
    if (q_seed > 0.0) {
      q = q_seed;
      f.eval_given(rho, q, e, de);
      q_seed = 0.0;
    } else {
      f.eval(rho, e, de, q);
    }
    const double res = e - target;
    if (std::abs(res) < tol_abs) {
      // One guarded polish step. Quadratic convergence parks the density at
      // the round-off floor instead of just inside the tolerance; the long
      // steady runs live off that extra accuracy. Residuals already at the
      // round-off floor are left alone, which keeps anchor hits bitwise.
      if (std::abs(res) > res_floor) {
        const double polished = guarded_step(rho, res, de);
        const double d = (polished - rho) / rho;
        // First-order isentrope-power update; exact to double precision for
        // the tiny polish displacements, with a pow fallback for guard pulls.
        q = std::abs(d) < 1e-8 ? q * (1.0 + f.gm1 * d) : std::pow(polished, f.gm1);
        return {EqOutcome::found, polished, k, q};
      }
      return {EqOutcome::found, rho, k, q};
    }
    if (k >= max_iter) return {EqOutcome::max_iter, rho, k, q};
    rho = guarded_step(rho, res, de);
  }
}

}  // namespace

DensitySolve solve_density_ideal(const EquilibriumAnchor& a, double phi, double r,
                                 const EquilibriumOptions& opt) {
  check_radius(a, r);
  const FluidEnergyFn f = make_energy_fn(a, r);
  const double target = a.be0 - phi;
  const double tol_abs = opt.tol * a.e_anchor;

  double rho_star = 0.0;
  double rho = a.rho0;
  if (a.m0 != 0.0) {
    const CriticalState cs =
        a.alpha == 0 ? CriticalState{a.rho_star0, a.e_star0} : critical_state(a, r);
    rho_star = cs.rho_star;
    if (target < cs.e_star) return {EqOutcome::no_equilibrium, 0.0, 0};
    if (target == cs.e_star) return {EqOutcome::found, cs.rho_star, 0};
    if (a.alpha > 0) rho = a.rho0 / a.rho_star0 * rho_star;
  } else if (!(target > 0.0)) {
    return {EqOutcome::no_equilibrium, 0.0, 0};
  }

  const double res_floor = 8.0 * std::numeric_limits<double>::epsilon() * a.e_anchor;
  const double q_seed = rho == a.rho0 ? a.q0 : 0.0;
  return newton_ideal(f, target, tol_abs, res_floor, rho_star,
                      a.regime == FlowRegime::supersonic, rho, q_seed, opt.max_iter);
}

DensitySolve solve_density_general(const EquilibriumAnchor& a, double phi, double r,
                                   const EquilibriumOptions& opt) {
  check_radius(a, r);
  const FluidEnergyFn f = make_energy_fn(a, r);
  const double target = a.be0 - phi;

  double rho = a.rho0;
  if (a.m0 != 0.0 && a.alpha > 0) {
    rho = a.rho0 / a.rho_star0 * critical_state(a, r).rho_star;
  }
  const double rho_init = rho;

  double e, de, q;
  f.eval(rho, e, de, q);
  const double d_init = de;

  for (int k = 0; k < opt.max_iter; ++k) {
    const double raw = (e - target) / de;
    double trial = rho - std::copysign(std::min(std::abs(raw), 0.25 * rho), raw);
    if (trial < 0.0) trial = 0.0;
    // Pull the trial back toward the current iterate while it sits on the
    // other side of the energy minimum than the initial guess.
    for (int halvings = 0; halvings < 60; ++halvings) {
      if (!(d_init * f.deriv(trial) < 0.0)) break;
      trial = 0.5 * (trial + rho);
    }
    const double delta = trial - rho;
    rho = trial;
    f.eval(rho, e, de, q);
    const double res = e - target;
    if (std::abs(res) < opt.tol * std::abs(target)) {
      // Same capped, guarded polish step as the main iteration; residuals at
      // the evaluation round-off floor are left alone.
      if (std::abs(res) > 8.0 * std::numeric_limits<double>::epsilon() * std::abs(target)) {
        const double raw2 = res / de;
        double polish = rho - std::copysign(std::min(std::abs(raw2), 0.25 * rho), raw2);
        if (polish < 0.0) polish = 0.0;
        for (int halvings = 0; halvings < 60; ++halvings) {
          if (!(d_init * f.deriv(polish) < 0.0)) break;
          polish = 0.5 * (polish + rho);
        }
        if (polish != rho && polish > 0.0) {
          const double d = (polish - rho) / rho;
          q = std::abs(d) < 1e-8 ? q * (1.0 + f.gm1 * d) : std::pow(polish, f.gm1);
          rho = polish;
        }
      }
      return {EqOutcome::found, rho, k + 1, q};
    }
    if (std::abs(delta) < opt.tol * std::max(rho_init, rho)) {
      return {EqOutcome::no_progress, rho, k + 1, q};
    }
    if (std::abs(de * rho) < opt.tol * std::abs(res)) {
      return {EqOutcome::converged_to_minimum, rho, k + 1, q};
    }
  }
  return {EqOutcome::max_iter, rho, opt.max_iter, 0.0};
}

bool profile_at_cell(const EquilibriumAnchor& a, int count, const double* xs,
                     const double* phis, const EquilibriumOptions& opt, PrimState* out) {
  if (a.alpha != 0 || a.eos.kind != EosKind::ideal) {
    for (int i = 0; i < count; ++i) {
      const ProfileSample s = profile_at(a, xs[i], phis[i], opt);
      if (s.outcome != EqOutcome::found) return false;
      out[i] = s.w;
    }
    return true;
  }
  // Cartesian ideal-gas fast path: the energy function, critical state and
  // initial guess are shared by every evaluation point of the cell. The
  // arithmetic matches profile_at exactly.
  const FluidEnergyFn f = make_energy_fn(a, 0.0);
  const double tol_abs = opt.tol * a.e_anchor;
  const double res_floor = 8.0 * std::numeric_limits<double>::epsilon() * a.e_anchor;
  const bool supersonic = a.regime == FlowRegime::supersonic;
  for (int i = 0; i < count; ++i) {
    const double target = a.be0 - phis[i];
    DensitySolve s;
    if (a.m0 != 0.0) {
      if (target < a.e_star0) return false;
      if (target == a.e_star0) {
        s = {EqOutcome::found, a.rho_star0, 0, 0.0};
      } else {
        s = newton_ideal(f, target, tol_abs, res_floor, a.rho_star0, supersonic, a.rho0,
                         a.q0, opt.max_iter);
      }
    } else {
      if (!(target > 0.0)) return false;
      s = newton_ideal(f, target, tol_abs, res_floor, 0.0, supersonic, a.rho0, a.q0,
                       opt.max_iter);
    }
    if (s.outcome != EqOutcome::found) return false;
    if (s.rho == a.rho0) {
      out[i] = {a.rho0, a.v0, a.p0};
      continue;
    }
    const double v = a.m0 / (1.0 * s.rho);
    const double p = s.q > 0.0 ? a.k0 * s.rho * s.q - a.eos.p_inf
                               : a.eos.pressure_at_entropy(s.rho, a.k0);
    out[i] = {s.rho, v, p};
  }
  return true;
}

ProfileSample profile_at(const EquilibriumAnchor& a, double x, double phi_x,
                         const EquilibriumOptions& opt) {
  const DensitySolve s = a.eos.kind == EosKind::ideal ? solve_density_ideal(a, phi_x, x, opt)
                                                      : solve_density_general(a, phi_x, x, opt);
  if (s.outcome != EqOutcome::found) return {s.outcome, {}};
  // An exact hit on the anchor density reproduces the anchor state bitwise.
  // For hydrostatic anchors the velocity is identically zero, so the anchor
  // density implies the anchor state at any location; likewise in Cartesian
  // geometry, where the profile has no explicit coordinate dependence.
  if (s.rho == a.rho0 && (a.alpha == 0 || a.m0 == 0.0 || x == a.x0)) {
    return {EqOutcome::found, {a.rho0, a.v0, a.p0}};
  }
  const double ra = a.alpha == 0 ? 1.0 : (a.alpha == 1 ? x : x * x);
  const double v = a.m0 / (ra * s.rho);
  // p = K rho^gamma - p_inf, reusing the isentrope power from the solve.
  const double p = s.q > 0.0 ? a.k0 * s.rho * s.q - a.eos.p_inf
                             : a.eos.pressure_at_entropy(s.rho, a.k0);
  return {EqOutcome::found, {s.rho, v, p}};
}

}  // namespace wbflow
