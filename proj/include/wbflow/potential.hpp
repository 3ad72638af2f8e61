#pragma once

#include <string>

#include "wbflow/errors.hpp"

namespace wbflow {

enum class PotentialKind { constant, linear, point_mass };

/// Analytic external gravitational potential, evaluated exactly at cell
/// centers and interfaces.
struct Potential {
  PotentialKind kind = PotentialKind::constant;
  double g = 0.0;   // linear: phi = g x
  double gm = 0.0;  // point mass: phi = -gm / r

  static Potential constant() { return {PotentialKind::constant, 0.0, 0.0}; }
  static Potential linear(double g) { return {PotentialKind::linear, g, 0.0}; }
  static Potential point_mass(double gm) { return {PotentialKind::point_mass, 0.0, gm}; }

  double phi(double x) const {
    switch (kind) {
      case PotentialKind::constant: return 0.0;
      case PotentialKind::linear: return g * x;
      default: return -gm / x;
    }
  }

  double dphi(double x) const {
    switch (kind) {
      case PotentialKind::constant: return 0.0;
      case PotentialKind::linear: return g;
      default: return gm / (x * x);
    }
  }
};

/// Separable 2D potential phi(x, y) = px(x) + py(y).
struct Potential2D {
  Potential px, py;

  double phi(double x, double y) const { return px.phi(x) + py.phi(y); }
  double dphi_dx(double x) const { return px.dphi(x); }
  double dphi_dy(double y) const { return py.dphi(y); }
};

}  // namespace wbflow
