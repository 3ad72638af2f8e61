#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wbflow/eos.hpp"
#include "wbflow/equilibrium.hpp"
#include "wbflow/flux.hpp"
#include "wbflow/grid.hpp"
#include "wbflow/potential.hpp"
#include "wbflow/reconstruction.hpp"
#include "wbflow/source.hpp"
#include "wbflow/state.hpp"

namespace wbflow {

enum class BcKind { frozen, outflow };
enum class ReconScheme { standard, wellbalanced };
enum class SourceScheme { standard, wellbalanced };
enum class GradPhiMode { analytic, fd };
enum class SchemeVariant { standard, wellbalanced };

BcKind bc_kind_from_string(const std::string& s);

struct SchemeConfig {
  ReconScheme recon = ReconScheme::wellbalanced;
  SourceScheme source = SourceScheme::wellbalanced;
  FluxKind flux = FluxKind::hllc;
  LimiterConfig limiter;
  bool clip = false;
  GradPhiMode grad_phi = GradPhiMode::analytic;
  EquilibriumOptions eq;

  void set_variant(SchemeVariant v) {
    recon = v == SchemeVariant::wellbalanced ? ReconScheme::wellbalanced : ReconScheme::standard;
    source = v == SchemeVariant::wellbalanced ? SourceScheme::wellbalanced : SourceScheme::standard;
  }
};

struct SolutionField {
  std::vector<ConsState> u;  // padded, grid.n_total()
  double t = 0.0;
};

struct TimeConfig {
  double cfl = 0.45;
  double t_end = 0.0;
  int rk_order = 2;
  std::vector<double> output_times;
};

struct RunReport {
  SolutionField final;
  std::vector<std::pair<double, std::vector<ConsState>>> snapshots;  // padded fields
  long steps = 0;
  long fallback_cell_stages = 0;
  double wall_seconds = 0.0;
};

// Two-stage strong-stability-preserving update shared by the 1D/2D solvers
// (and directly testable on synthetic right-hand sides). `op` must return a
// rate vector with zero entries outside the cells it owns; `bc` refreshes
// ghost data in place before each evaluation.
template <class State, class Op, class Bc>
void ssprk_step_impl(std::vector<State>& u, double dt, int order, Op&& op, Bc&& bc,
                     std::vector<State>& stage) {
  bc(u);
  const std::vector<State>& l1 = op(u);
  const int n = static_cast<int>(u.size());
  if (order <= 1) {
    for (int i = 0; i < n; ++i) u[i] = madd(u[i], dt, l1[i]);
    return;
  }
  stage.resize(u.size());
  for (int i = 0; i < n; ++i) stage[i] = madd(u[i], dt, l1[i]);
  bc(stage);
  const std::vector<State>& l2 = op(stage);
  for (int i = 0; i < n; ++i) u[i] = heun_average(u[i], madd(stage[i], dt, l2[i]));
}

/// Semi-discrete finite volume solver for the 1D Euler equations with
/// gravity, in Cartesian, cylindrical or spherical geometry.
class EulerSolver1D {
 public:
  EulerSolver1D(Grid1D grid, EosModel eos, Potential phi, SchemeConfig scheme);

  const Grid1D& grid() const { return grid_; }
  const EosModel& eos() const { return eos_; }
  const Potential& potential() const { return phi_; }
  const SchemeConfig& scheme() const { return scheme_; }
  SchemeConfig& scheme() { return scheme_; }

  void set_boundary(BcKind left, BcKind right, const std::vector<ConsState>& initial);

  // Rates of change of the conserved cell averages; zero on ghost entries.
  const std::vector<ConsState>& spatial_operator(const std::vector<ConsState>& u);

  double cfl_timestep(const std::vector<ConsState>& u, double cfl) const;

  void fill_ghosts(std::vector<ConsState>& u) const;

  // One SSP-RK step (order 1 or 2), including ghost refreshes per stage.
  void step(std::vector<ConsState>& u, double dt, int rk_order);

  // Diagnostics from the most recent spatial_operator call.
  long fallback_count() const { return fallback_count_; }
  const std::vector<std::uint8_t>& fallback_flags() const { return fallback_; }
  FluxVector boundary_flux_left() const;
  FluxVector boundary_flux_right() const;

 private:
  Grid1D grid_;
  EosModel eos_;
  Potential phi_;
  SchemeConfig scheme_;

  BcKind bc_left_ = BcKind::frozen;
  BcKind bc_right_ = BcKind::frozen;
  std::vector<ConsState> frozen_;  // padded copy of the initial data

  // Potential sampled once at the fixed mesh locations.
  std::vector<double> phi_center_;
  std::vector<double> phi_iface_;
  std::vector<double> dphi_center_;

  // Scratch, reused across operator evaluations.
  std::vector<PrimState> prims_;
  std::vector<PrimState> trace_l_, trace_r_;
  std::vector<PrimState> eq_l_, eq_r_;
  std::vector<std::uint8_t> fallback_;
  std::vector<FluxVector> flux_;
  std::vector<ConsState> rates_;
  std::vector<ConsState> stage_;
  long fallback_count_ = 0;
};

RunReport run(EulerSolver1D& solver, SolutionField initial, const TimeConfig& time);

}  // namespace wbflow
