#pragma once

#include <string>

#include "wbflow/eos.hpp"
#include "wbflow/state.hpp"

namespace wbflow {

enum class FluxKind { hlle, hllc };

FluxKind flux_kind_from_string(const std::string& s);

struct FluxVector {
  double mass = 0.0, mom = 0.0, energy = 0.0;
};

struct FluxVector2 {
  double mass = 0.0, momn = 0.0, momt = 0.0, energy = 0.0;
};

FluxVector physical_flux(const PrimState& w, const EosModel& eos);

// Approximate Riemann solvers with Einfeldt wave-speed estimates
// (Roe-averaged velocity and sound speed bounded by the one-sided signal
// speeds). These speeds let isolated stationary shocks pass through exactly.
FluxVector hlle(const PrimState& l, const PrimState& r, const EosModel& eos);
FluxVector hllc(const PrimState& l, const PrimState& r, const EosModel& eos);

inline FluxVector riemann_flux(FluxKind kind, const PrimState& l, const PrimState& r,
                               const EosModel& eos) {
  return kind == FluxKind::hlle ? hlle(l, r, eos) : hllc(l, r, eos);
}

// Directional variants for the 2D sweeps: vx is the face-normal velocity and
// vy the transverse one; transverse momentum is advected passively.
FluxVector2 physical_flux_normal(const PrimState2& w, const EosModel& eos);
FluxVector2 hlle_normal(const PrimState2& l, const PrimState2& r, const EosModel& eos);
FluxVector2 hllc_normal(const PrimState2& l, const PrimState2& r, const EosModel& eos);

inline FluxVector2 riemann_flux_normal(FluxKind kind, const PrimState2& l, const PrimState2& r,
                                       const EosModel& eos) {
  return kind == FluxKind::hlle ? hlle_normal(l, r, eos) : hllc_normal(l, r, eos);
}

}  // namespace wbflow
