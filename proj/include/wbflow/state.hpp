#pragma once

#include <cmath>

#include "wbflow/eos.hpp"

namespace wbflow {

// One-dimensional states: [rho, v, p] primitive, [rho, rho v, E] conserved.
struct PrimState {
  double rho = 0.0, v = 0.0, p = 0.0;
};

struct ConsState {
  double rho = 0.0, mom = 0.0, E = 0.0;
};

// Two-dimensional counterparts. Inside directional sweeps and Riemann solver
// calls, vx/momx is the face-normal component and vy/momy the transverse one.
struct PrimState2 {
  double rho = 0.0, vx = 0.0, vy = 0.0, p = 0.0;
};

struct ConsState2 {
  double rho = 0.0, momx = 0.0, momy = 0.0, E = 0.0;
};

// rho e + rho v^2 / 2 with rho e = (p + gamma p_inf) / (gamma - 1); no
// domain checks, callers hold admissible states.
inline double total_energy(const PrimState& w, const EosModel& eos) {
  return (w.p + eos.gamma * eos.p_inf) / (eos.gamma - 1.0) + 0.5 * (w.rho * w.v) * w.v;
}

inline ConsState to_conserved(const PrimState& w, const EosModel& eos) {
  const double m = w.rho * w.v;
  return {w.rho, m, w.rho * eos.internal_energy(w.rho, w.p) + 0.5 * m * w.v};
}

inline PrimState to_primitive(const ConsState& u, const EosModel& eos) {
  const double v = u.mom / u.rho;
  const double e = (u.E - 0.5 * u.mom * v) / u.rho;
  return {u.rho, v, eos.pressure(u.rho, e)};
}

// No domain checks; callers validate with admissible() afterwards.
inline PrimState to_primitive_unchecked(const ConsState& u, const EosModel& eos) {
  const double v = u.mom / u.rho;
  const double e = (u.E - 0.5 * u.mom * v) / u.rho;
  return {u.rho, v, (eos.gamma - 1.0) * u.rho * e - eos.gamma * eos.p_inf};
}

inline PrimState2 to_primitive_unchecked(const ConsState2& u, const EosModel& eos) {
  const double vx = u.momx / u.rho;
  const double vy = u.momy / u.rho;
  const double e = (u.E - 0.5 * (u.momx * vx + u.momy * vy)) / u.rho;
  return {u.rho, vx, vy, (eos.gamma - 1.0) * u.rho * e - eos.gamma * eos.p_inf};
}

inline ConsState2 to_conserved(const PrimState2& w, const EosModel& eos) {
  const double mx = w.rho * w.vx;
  const double my = w.rho * w.vy;
  const double E = w.rho * eos.internal_energy(w.rho, w.p) + 0.5 * (mx * w.vx + my * w.vy);
  return {w.rho, mx, my, E};
}

inline PrimState2 to_primitive(const ConsState2& u, const EosModel& eos) {
  const double vx = u.momx / u.rho;
  const double vy = u.momy / u.rho;
  const double e = (u.E - 0.5 * (u.momx * vx + u.momy * vy)) / u.rho;
  return {u.rho, vx, vy, eos.pressure(u.rho, e)};
}

inline bool admissible(const PrimState& w, const EosModel& eos) {
  return std::isfinite(w.rho) && std::isfinite(w.v) && std::isfinite(w.p) &&
         w.rho >= kDensityFloor && w.p + eos.p_inf >= kPressureFloor;
}

inline bool admissible(const PrimState2& w, const EosModel& eos) {
  return std::isfinite(w.rho) && std::isfinite(w.vx) && std::isfinite(w.vy) &&
         std::isfinite(w.p) && w.rho >= kDensityFloor && w.p + eos.p_inf >= kPressureFloor;
}

// Element-wise helpers for the time integrator.
inline ConsState madd(const ConsState& a, double s, const ConsState& b) {
  return {a.rho + s * b.rho, a.mom + s * b.mom, a.E + s * b.E};
}

inline ConsState2 madd(const ConsState2& a, double s, const ConsState2& b) {
  return {a.rho + s * b.rho, a.momx + s * b.momx, a.momy + s * b.momy, a.E + s * b.E};
}

inline ConsState heun_average(const ConsState& un, const ConsState& u2) {
  return {0.5 * (un.rho + u2.rho), 0.5 * (un.mom + u2.mom), 0.5 * (un.E + u2.E)};
}

inline ConsState2 heun_average(const ConsState2& un, const ConsState2& u2) {
  return {0.5 * (un.rho + u2.rho), 0.5 * (un.momx + u2.momx), 0.5 * (un.momy + u2.momy),
          0.5 * (un.E + u2.E)};
}

}  // namespace wbflow
