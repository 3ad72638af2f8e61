#include "wbflow/flux.hpp"

#include <cmath>
#include <stdexcept>

#include "wbflow/errors.hpp"

namespace wbflow {

namespace {

struct Waves {
  double sl, sr;
};

// Einfeldt estimates: bound the one-sided signal speeds by the Roe-averaged
// eigenvalues. H - v^2/2 equals the specific enthalpy, and c^2 = (gamma-1) h
// holds for both EoS kinds in this family.
Waves einfeldt(double gamma, double rho_l, double vl, double hl, double cl, double rho_r,
               double vr, double hr, double cr) {
  const double wl = std::sqrt(rho_l), wr = std::sqrt(rho_r);
  const double inv = 1.0 / (wl + wr);
  const double v = (wl * vl + wr * vr) * inv;
  const double h = (wl * hl + wr * hr) * inv;
  const double c2 = (gamma - 1.0) * (h - 0.5 * v * v);
  if (!(c2 > 0.0)) {
    throw std::domain_error("flux: Roe-averaged sound speed not positive");
  }
  const double c = std::sqrt(c2);
  return {std::min(vl - cl, v - c), std::max(vr + cr, v + c)};
}

Waves einfeldt2(double gamma, const PrimState2& l, const PrimState2& r, double Hl, double Hr,
                double cl, double cr) {
  const double wl = std::sqrt(l.rho), wr = std::sqrt(r.rho);
  const double inv = 1.0 / (wl + wr);
  const double vn = (wl * l.vx + wr * r.vx) * inv;
  const double vt = (wl * l.vy + wr * r.vy) * inv;
  const double h = (wl * Hl + wr * Hr) * inv;
  const double c2 = (gamma - 1.0) * (h - 0.5 * (vn * vn + vt * vt));
  if (!(c2 > 0.0)) {
    throw std::domain_error("flux: Roe-averaged sound speed not positive");
  }
  const double c = std::sqrt(c2);
  return {std::min(l.vx - cl, vn - c), std::max(r.vx + cr, vn + c)};
}

inline bool same_state(const PrimState& a, const PrimState& b) {
  return a.rho == b.rho && a.v == b.v && a.p == b.p;
}

inline bool same_state(const PrimState2& a, const PrimState2& b) {
  return a.rho == b.rho && a.vx == b.vx && a.vy == b.vy && a.p == b.p;
}

}  // namespace

FluxKind flux_kind_from_string(const std::string& s) {
  if (s == "hlle" || s == "hll") return FluxKind::hlle;
  if (s == "hllc") return FluxKind::hllc;
  throw ConfigError("unknown flux kind: " + s);
}

FluxVector physical_flux(const PrimState& w, const EosModel& eos) {
  if (!(w.rho >= kDensityFloor) || !(w.p + eos.p_inf >= kPressureFloor)) {
    throw std::domain_error("flux: inadmissible state");
  }
  const double E = total_energy(w, eos);
  return {w.rho * w.v, (w.rho * w.v) * w.v + w.p, (E + w.p) * w.v};
}

FluxVector hlle(const PrimState& l, const PrimState& r, const EosModel& eos) {
  if (same_state(l, r)) return physical_flux(l, eos);

  const ConsState ul{l.rho, l.rho * l.v, total_energy(l, eos)};
  const ConsState ur{r.rho, r.rho * r.v, total_energy(r, eos)};
  const double cl = eos.sound_speed(l.rho, l.p);
  const double cr = eos.sound_speed(r.rho, r.p);
  const Waves s = einfeldt(eos.gamma, l.rho, l.v, (ul.E + l.p) / l.rho, cl, r.rho, r.v,
                           (ur.E + r.p) / r.rho, cr);

  const FluxVector fl = physical_flux(l, eos);
  if (s.sl >= 0.0) return fl;
  const FluxVector fr = physical_flux(r, eos);
  if (s.sr <= 0.0) return fr;

  const double inv = 1.0 / (s.sr - s.sl);
  const double slr = s.sl * s.sr;
  return {(s.sr * fl.mass - s.sl * fr.mass + slr * (ur.rho - ul.rho)) * inv,
          (s.sr * fl.mom - s.sl * fr.mom + slr * (ur.mom - ul.mom)) * inv,
          (s.sr * fl.energy - s.sl * fr.energy + slr * (ur.E - ul.E)) * inv};
}

FluxVector hllc(const PrimState& l, const PrimState& r, const EosModel& eos) {
  if (same_state(l, r)) return physical_flux(l, eos);

  const ConsState ul{l.rho, l.rho * l.v, total_energy(l, eos)};
  const ConsState ur{r.rho, r.rho * r.v, total_energy(r, eos)};
  const double cl = eos.sound_speed(l.rho, l.p);
  const double cr = eos.sound_speed(r.rho, r.p);
  const Waves s = einfeldt(eos.gamma, l.rho, l.v, (ul.E + l.p) / l.rho, cl, r.rho, r.v,
                           (ur.E + r.p) / r.rho, cr);

  if (s.sl >= 0.0) return physical_flux(l, eos);
  if (s.sr <= 0.0) return physical_flux(r, eos);

  // Contact speed from the HLL middle state (Toro).
  const double ml = l.rho * (s.sl - l.v);
  const double mr = r.rho * (s.sr - r.v);
  const double s_star = (r.p - l.p + l.v * ml - r.v * mr) / (ml - mr);

  if (s_star >= 0.0) {
    const FluxVector fl = physical_flux(l, eos);
    const double ratio = (s.sl - l.v) / (s.sl - s_star);
    const double rho_s = l.rho * ratio;
    const double mom_s = rho_s * s_star;
    const double E_s = ratio * ul.E + rho_s * (s_star - l.v) * (s_star + l.p / ml);
    return {fl.mass + s.sl * (rho_s - ul.rho), fl.mom + s.sl * (mom_s - ul.mom),
            fl.energy + s.sl * (E_s - ul.E)};
  }
  const FluxVector fr = physical_flux(r, eos);
  const double ratio = (s.sr - r.v) / (s.sr - s_star);
  const double rho_s = r.rho * ratio;
  const double mom_s = rho_s * s_star;
  const double E_s = ratio * ur.E + rho_s * (s_star - r.v) * (s_star + r.p / mr);
  return {fr.mass + s.sr * (rho_s - ur.rho), fr.mom + s.sr * (mom_s - ur.mom),
          fr.energy + s.sr * (E_s - ur.E)};
}

FluxVector2 physical_flux_normal(const PrimState2& w, const EosModel& eos) {
  const double mn = w.rho * w.vx;
  const double E = w.rho * eos.internal_energy(w.rho, w.p) +
                   0.5 * w.rho * (w.vx * w.vx + w.vy * w.vy);
  return {mn, mn * w.vx + w.p, mn * w.vy, (E + w.p) * w.vx};
}

FluxVector2 hlle_normal(const PrimState2& l, const PrimState2& r, const EosModel& eos) {
  if (same_state(l, r)) return physical_flux_normal(l, eos);

  const ConsState2 ul = to_conserved(l, eos);
  const ConsState2 ur = to_conserved(r, eos);
  const double cl = eos.sound_speed(l.rho, l.p);
  const double cr = eos.sound_speed(r.rho, r.p);
  const Waves s = einfeldt2(eos.gamma, l, r, (ul.E + l.p) / l.rho, (ur.E + r.p) / r.rho, cl, cr);

  const FluxVector2 fl = physical_flux_normal(l, eos);
  if (s.sl >= 0.0) return fl;
  const FluxVector2 fr = physical_flux_normal(r, eos);
  if (s.sr <= 0.0) return fr;

  const double inv = 1.0 / (s.sr - s.sl);
  const double slr = s.sl * s.sr;
  return {(s.sr * fl.mass - s.sl * fr.mass + slr * (ur.rho - ul.rho)) * inv,
          (s.sr * fl.momn - s.sl * fr.momn + slr * (ur.momx - ul.momx)) * inv,
          (s.sr * fl.momt - s.sl * fr.momt + slr * (ur.momy - ul.momy)) * inv,
          (s.sr * fl.energy - s.sl * fr.energy + slr * (ur.E - ul.E)) * inv};
}

FluxVector2 hllc_normal(const PrimState2& l, const PrimState2& r, const EosModel& eos) {
  if (same_state(l, r)) return physical_flux_normal(l, eos);

  const ConsState2 ul = to_conserved(l, eos);
  const ConsState2 ur = to_conserved(r, eos);
  const double cl = eos.sound_speed(l.rho, l.p);
  const double cr = eos.sound_speed(r.rho, r.p);
  const Waves s = einfeldt2(eos.gamma, l, r, (ul.E + l.p) / l.rho, (ur.E + r.p) / r.rho, cl, cr);

  if (s.sl >= 0.0) return physical_flux_normal(l, eos);
  if (s.sr <= 0.0) return physical_flux_normal(r, eos);

  const double ml = l.rho * (s.sl - l.vx);
  const double mr = r.rho * (s.sr - r.vx);
  const double s_star = (r.p - l.p + l.vx * ml - r.vx * mr) / (ml - mr);

  if (s_star >= 0.0) {
    const FluxVector2 fl = physical_flux_normal(l, eos);
    const double ratio = (s.sl - l.vx) / (s.sl - s_star);
    const double rho_s = l.rho * ratio;
    const double momn_s = rho_s * s_star;
    const double momt_s = ratio * ul.momy;
    const double E_s = ratio * ul.E + rho_s * (s_star - l.vx) * (s_star + l.p / ml);
    return {fl.mass + s.sl * (rho_s - ul.rho), fl.momn + s.sl * (momn_s - ul.momx),
            fl.momt + s.sl * (momt_s - ul.momy), fl.energy + s.sl * (E_s - ul.E)};
  }
  const FluxVector2 fr = physical_flux_normal(r, eos);
  const double ratio = (s.sr - r.vx) / (s.sr - s_star);
  const double rho_s = r.rho * ratio;
  const double momn_s = rho_s * s_star;
  const double momt_s = ratio * ur.momy;
  const double E_s = ratio * ur.E + rho_s * (s_star - r.vx) * (s_star + r.p / mr);
  return {fr.mass + s.sr * (rho_s - ur.rho), fr.momn + s.sr * (momn_s - ur.momx),
          fr.momt + s.sr * (momt_s - ur.momy), fr.energy + s.sr * (E_s - ur.E)};
}

}  // namespace wbflow
