#pragma once

#include <string>

namespace wbflow {

// Admissibility floors. States are rejected (domain error), never clamped,
// when rho or p + p_inf drops below these.
inline constexpr double kDensityFloor = 1e-100;
inline constexpr double kPressureFloor = 1e-100;

enum class EosKind { ideal, stiffened };

/// Convex two-parameter equation-of-state family.
///
/// Both members share the isentrope form p + p_inf = K rho^gamma, where K is
/// a function of entropy alone (the "entropy parameter"). The ideal gas has
/// p_inf = 0; the stiffened gas (p = (gamma-1) rho e - gamma p_inf) is the
/// non-ideal convex instance used to exercise the general-EoS code paths.
struct EosModel {
  EosKind kind = EosKind::ideal;
  double gamma = 5.0 / 3.0;
  double p_inf = 0.0;

  static EosModel ideal(double gamma);
  static EosModel stiffened(double gamma, double p_inf);

  // p(rho, e) and its inverse e(rho, p).
  double pressure(double rho, double e) const;
  double internal_energy(double rho, double p) const;

  // c^2 = (dp/drho)_s = gamma (p + p_inf) / rho.
  double sound_speed2(double rho, double p) const;
  double sound_speed(double rho, double p) const;

  // Entropy parameter K = (p + p_inf) / rho^gamma and maps at fixed K.
  double entropy_param(double rho, double p) const;
  double pressure_at_entropy(double rho, double k) const;
  double enthalpy(double rho, double k) const;  // gamma/(gamma-1) K rho^(gamma-1)
  double sound_speed2_at_entropy(double rho, double k) const;

  std::string describe() const;
};

}  // namespace wbflow
