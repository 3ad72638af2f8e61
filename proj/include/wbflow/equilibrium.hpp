#pragma once

#include "wbflow/eos.hpp"
#include "wbflow/state.hpp"

namespace wbflow {

enum class FlowRegime { subsonic, supersonic, sonic };
enum class EqOutcome { found, no_equilibrium, no_progress, converged_to_minimum, max_iter };
enum class Existence { none, unique, two_branches };

struct EquilibriumOptions {
  double tol = 1e-13;
  int max_iter = 100;
};

/// Frozen constants of a local steady adiabatic flow profile, anchored at a
/// cell center: mass flux m0 (= r0^alpha rho0 v0), Bernoulli constant
/// Be0 = v0^2/2 + h0 + phi0 and entropy parameter K0. alpha selects the
/// geometry (0 Cartesian, 1 cylindrical, 2 spherical).
struct EquilibriumAnchor {
  EosModel eos;
  int alpha = 0;
  double x0 = 0.0, phi0 = 0.0;
  double rho0 = 0.0, v0 = 0.0, p0 = 0.0;
  double m0 = 0.0;
  double be0 = 0.0;
  double k0 = 0.0;
  double e_anchor = 0.0;    // v0^2/2 + h0, the fluid energy at the anchor
  double q0 = 0.0;          // rho0^(gamma-1)
  double rho_star0 = 0.0;   // critical density at x0 (0 for hydrostatic anchors)
  double e_star0 = 0.0;
  FlowRegime regime = FlowRegime::subsonic;
};

/// Critical (sonic) state of the fluid-energy function e(rho) at radius r.
/// For m0 == 0 the function is monotone; the returned marker is {0, 0}.
struct CriticalState {
  double rho_star = 0.0;
  double e_star = 0.0;
};

struct DensitySolve {
  EqOutcome outcome = EqOutcome::no_equilibrium;
  double rho = 0.0;
  int iterations = 0;
  // rho^(gamma-1) at the returned density when the solve evaluated it; lets
  // callers form p = K rho^gamma without another pow. 0 when unavailable.
  double q = 0.0;
};

struct ProfileSample {
  EqOutcome outcome = EqOutcome::no_equilibrium;
  PrimState w;
};

EquilibriumAnchor make_anchor(const PrimState& w0, double x0, double phi0, const EosModel& eos,
                              int alpha);

// Fluid part of the Bernoulli function, e(rho) = m0^2/(2 r^(2a) rho^2) + h(rho),
// and its density derivative. r is ignored for alpha == 0.
double fluid_energy(const EquilibriumAnchor& a, double rho, double r);
double fluid_energy_deriv(const EquilibriumAnchor& a, double rho, double r);

CriticalState critical_state(const EquilibriumAnchor& a, double r);

// Number of solutions of e(rho) = Be0 - phi at the given location.
Existence classify_existence(const EquilibriumAnchor& a, double phi, double r);

// Initial guess rho0 * rho_star(r) / rho_star(r0); keeps the guess on the
// anchor's branch when the critical density varies with r.
double curvilinear_initial_guess(const EquilibriumAnchor& a, double r);

// Guarded hybrid Newton iteration for the equilibrium density. The ideal
// variant keeps iterates on the anchor's sub-/supersonic branch using the
// closed-form critical density; the general variant guards with the sign of
// e'(rho) and reports failures as values.
DensitySolve solve_density_ideal(const EquilibriumAnchor& a, double phi, double r,
                                 const EquilibriumOptions& opt);
DensitySolve solve_density_general(const EquilibriumAnchor& a, double phi, double r,
                                   const EquilibriumOptions& opt);

// Full primitive state of the profile at coordinate x (phi_x = phi(x)).
// Routes to the ideal or general density solve depending on the EoS kind.
ProfileSample profile_at(const EquilibriumAnchor& a, double x, double phi_x,
                         const EquilibriumOptions& opt);

// Profile at several points of one cell (interfaces and neighbor centers),
// sharing the per-cell solver setup. Fills out[0..count) and returns false as
// soon as any point has no solution. Bitwise-identical to repeated
// profile_at calls.
bool profile_at_cell(const EquilibriumAnchor& a, int count, const double* xs,
                     const double* phis, const EquilibriumOptions& opt, PrimState* out);

}  // namespace wbflow
