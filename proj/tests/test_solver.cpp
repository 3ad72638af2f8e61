#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wbflow/diagnostics.hpp"
#include "wbflow/problems.hpp"
#include "wbflow/solver.hpp"

using namespace wbflow;

namespace {

double max_interior_rate(const std::vector<ConsState>& rates, const Grid1D& g) {
  double m = 0.0;
  for (int c = g.begin(); c < g.end(); ++c) {
    m = std::max({m, std::abs(rates[c].rho), std::abs(rates[c].mom), std::abs(rates[c].E)});
  }
  return m;
}

// Residual scaled by the magnitude of the flux terms being balanced in each
// cell. The cancellation quality is set by the equilibrium solve, so the
// bound is relative to A |f| / |V|, which grows like 1/dx and with steep
// profiles near a curvilinear inner boundary.
double max_relative_residual(const EulerSolver1D& solver, const std::vector<ConsState>& rates,
                             const std::vector<ConsState>& u, const Grid1D& g,
                             const EosModel& eos) {
  double worst = 0.0;
  for (int c = g.begin(); c < g.end(); ++c) {
    const PrimState w = to_primitive(u[c], eos);
    const FluxVector f = physical_flux(w, eos);
    const double scale = 1.0 + g.area[c + 1] *
                                   (std::abs(f.mass) + std::abs(f.mom) + std::abs(f.energy)) *
                                   g.inv_volume[c];
    const double r =
        std::max({std::abs(rates[c].rho), std::abs(rates[c].mom), std::abs(rates[c].E)});
    worst = std::max(worst, r / scale);
  }
  return worst;
}

}  // namespace

TEST_CASE("uniform rest state without gravity is a fixed point of the operator") {
  const Grid1D grid = build_grid_1d(Geometry::cartesian, 0.0, 2.0, 32);
  const EosModel eos = EosModel::ideal(1.4);
  SchemeConfig scheme;
  for (SchemeVariant v : {SchemeVariant::standard, SchemeVariant::wellbalanced}) {
    scheme.set_variant(v);
    EulerSolver1D solver(grid, eos, Potential::constant(), scheme);
    std::vector<ConsState> u(grid.n_total(), to_conserved(PrimState{1.0, 0.0, 1.0}, eos));
    solver.set_boundary(BcKind::frozen, BcKind::frozen, u);
    const auto& rates = solver.spatial_operator(u);
    CHECK(max_interior_rate(rates, grid) == 0.0);
  }
}

TEST_CASE("steady profiles are fixed points of the well-balanced operator") {
  struct Case {
    const char* name;
    Problem1D prob;
  };
  Case cases[] = {
      {"gaussian M=0", make_gaussian_bump(0.0, 0.0, 48, SchemeVariant::wellbalanced)},
      {"gaussian M=0.01", make_gaussian_bump(0.01, 0.0, 48, SchemeVariant::wellbalanced)},
      {"gaussian M=2.5", make_gaussian_bump(2.5, 0.0, 48, SchemeVariant::wellbalanced)},
      {"bondi M=0.9", make_bondi(0.9, 0.0, 48, SchemeVariant::wellbalanced)},
      {"bondi M=2.0", make_bondi(2.0, 0.0, 48, SchemeVariant::wellbalanced)},
      {"bondi shock", make_bondi_shock(48, SchemeVariant::wellbalanced)},
  };
  for (Case& cs : cases) {
    INFO(cs.name);
    for (int order : {1, 2}) {
      cs.prob.scheme.limiter.order = order;
      EulerSolver1D solver = cs.prob.make_solver();
      auto u = cs.prob.initial.u;
      solver.fill_ghosts(u);
      const auto& rates = solver.spatial_operator(u);
      CHECK(max_relative_residual(solver, rates, u, cs.prob.grid, cs.prob.eos) <= 1e-11);
    }
  }
}

TEST_CASE("mass rates telescope to the boundary fluxes") {
  Problem1D prob = make_gaussian_bump(0.01, 1e-2, 64, SchemeVariant::wellbalanced);
  EulerSolver1D solver = prob.make_solver();
  auto u = prob.initial.u;
  solver.fill_ghosts(u);
  const auto& rates = solver.spatial_operator(u);
  double total = 0.0;
  for (int c = prob.grid.begin(); c < prob.grid.end(); ++c) {
    total += rates[c].rho * prob.grid.volume[c];
  }
  const double bdry = solver.boundary_flux_left().mass - solver.boundary_flux_right().mass;
  CHECK(total == doctest::Approx(bdry).epsilon(1e-13));
}

TEST_CASE("cfl time step") {
  const EosModel eos = EosModel::ideal(5.0 / 3.0);
  SchemeConfig scheme;

  SUBCASE("single resting cell") {
    const Grid1D grid = build_grid_1d(Geometry::cartesian, 0.0, 1.0, 1);
    EulerSolver1D solver(grid, EosModel::ideal(2.0), Potential::constant(), scheme);
    // c = sqrt(gamma p / rho) = 1 for gamma = 2, p = 1/2, rho = 1.
    std::vector<ConsState> u(grid.n_total(),
                             to_conserved(PrimState{1.0, 0.0, 0.5}, EosModel::ideal(2.0)));
    CHECK(solver.cfl_timestep(u, 0.45) == doctest::Approx(0.45).epsilon(1e-14));
  }

  SUBCASE("halves under refinement") {
    const Grid1D g1 = build_grid_1d(Geometry::cartesian, 0.0, 2.0, 64);
    const Grid1D g2 = build_grid_1d(Geometry::cartesian, 0.0, 2.0, 128);
    EulerSolver1D s1(g1, eos, Potential::constant(), scheme);
    EulerSolver1D s2(g2, eos, Potential::constant(), scheme);
    const ConsState state = to_conserved(PrimState{1.0, -0.4, 1.0}, eos);
    const std::vector<ConsState> u1(g1.n_total(), state), u2(g2.n_total(), state);
    const double dt1 = s1.cfl_timestep(u1, 0.45);
    const double dt2 = s2.cfl_timestep(u2, 0.45);
    CHECK(dt2 == doctest::Approx(0.5 * dt1).epsilon(1e-14));
  }

  SUBCASE("supersonic anchor value") {
    const Grid1D grid = build_grid_1d(Geometry::cartesian, 0.0, 2.0, 16);
    EulerSolver1D solver(grid, eos, Potential::constant(), scheme);
    const double c = std::sqrt(5.0 / 3.0);
    std::vector<ConsState> u(grid.n_total(), to_conserved(PrimState{1.0, -2.5 * c, 1.0}, eos));
    CHECK(solver.cfl_timestep(u, 0.45) ==
          doctest::Approx(0.45 * grid.dx / (3.5 * c)).epsilon(1e-14));
  }
}

TEST_CASE("ssprk stage algebra") {
  SUBCASE("zero right-hand side is the identity") {
    std::vector<ConsState> u{{1.0, 2.0, 3.0}, {0.5, -1.0, 2.5}};
    std::vector<ConsState> zero(u.size(), ConsState{});
    std::vector<ConsState> scratch;
    for (int order : {1, 2}) {
      auto v = u;
      ssprk_step_impl(
          v, 0.3, order, [&](const std::vector<ConsState>&) -> const std::vector<ConsState>& {
            return zero;
          },
          [](std::vector<ConsState>&) {}, scratch);
      CHECK(v[0].rho == u[0].rho);
      CHECK(v[1].E == u[1].E);
    }
  }

  SUBCASE("heun on a linear scalar equation") {
    const double lambda = -0.8, dt = 0.37, u0 = 1.7;
    std::vector<ConsState> u{{u0, 0.0, 0.0}};
    std::vector<ConsState> rates(1);
    std::vector<ConsState> scratch;
    ssprk_step_impl(
        u, dt, 2,
        [&](const std::vector<ConsState>& v) -> const std::vector<ConsState>& {
          rates[0] = {lambda * v[0].rho, 0.0, 0.0};
          return rates;
        },
        [](std::vector<ConsState>&) {}, scratch);
    const double z = lambda * dt;
    CHECK(u[0].rho == doctest::Approx(u0 * (1.0 + z + 0.5 * z * z)).epsilon(1e-15));
  }
}

TEST_CASE("steady data stay fixed over many steps") {
  Problem1D prob = make_gaussian_bump(0.01, 0.0, 32, SchemeVariant::wellbalanced);
  EulerSolver1D solver = prob.make_solver();
  auto u = prob.initial.u;
  const auto u0 = u;
  for (int s = 0; s < 50; ++s) {
    const double dt = solver.cfl_timestep(u, 0.45);
    solver.step(u, dt, 2);
  }
  double max_dev = 0.0;
  for (int c = prob.grid.begin(); c < prob.grid.end(); ++c) {
    max_dev = std::max({max_dev, std::abs(u[c].rho - u0[c].rho),
                        std::abs(u[c].mom - u0[c].mom), std::abs(u[c].E - u0[c].E)});
  }
  CHECK(max_dev <= 1e-11);
}

TEST_CASE("constant potential: both schemes produce the same trajectory") {
  const Grid1D grid = build_grid_1d(Geometry::cartesian, 0.0, 2.0, 64);
  const EosModel eos = EosModel::ideal(5.0 / 3.0);
  // Non-trivial data: a pressure pulse.
  std::vector<ConsState> u0(grid.n_total());
  for (int c = 0; c < grid.n_total(); ++c) {
    const double x = grid.center[c];
    u0[c] = to_conserved(
        PrimState{1.0, 0.1, 1.0 + 0.5 * std::exp(-(x - 1.0) * (x - 1.0) / 0.01)}, eos);
  }
  SchemeConfig scheme;
  scheme.set_variant(SchemeVariant::wellbalanced);
  EulerSolver1D wb(grid, eos, Potential::constant(), scheme);
  wb.set_boundary(BcKind::frozen, BcKind::frozen, u0);
  scheme.set_variant(SchemeVariant::standard);
  EulerSolver1D st(grid, eos, Potential::constant(), scheme);
  st.set_boundary(BcKind::frozen, BcKind::frozen, u0);

  auto uw = u0, us = u0;
  for (int s = 0; s < 20; ++s) {
    const double dt = wb.cfl_timestep(uw, 0.45);
    wb.step(uw, dt, 2);
    st.step(us, dt, 2);
  }
  for (int c = grid.begin(); c < grid.end(); ++c) {
    CHECK(std::abs(uw[c].rho - us[c].rho) <= 1e-12 * us[c].rho);
    CHECK(std::abs(uw[c].E - us[c].E) <= 1e-12 * us[c].E);
  }
}

TEST_CASE("single step conserves mass up to boundary fluxes") {
  // Rest state, frozen boundaries, zero boundary mass flux: total mass is
  // constant to round-off.
  const Grid1D grid = build_grid_1d(Geometry::spherical, 0.5, 1.5, 32);
  const EosModel eos = EosModel::ideal(5.0 / 3.0);
  SchemeConfig scheme;
  scheme.set_variant(SchemeVariant::standard);
  EulerSolver1D solver(grid, eos, Potential::constant(), scheme);
  std::vector<ConsState> u(grid.n_total(), to_conserved(PrimState{1.0, 0.0, 1.0}, eos));
  solver.set_boundary(BcKind::frozen, BcKind::frozen, u);
  double mass0 = 0.0;
  for (int c = grid.begin(); c < grid.end(); ++c) mass0 += u[c].rho * grid.volume[c];
  solver.step(u, 1e-3, 1);
  double mass1 = 0.0;
  for (int c = grid.begin(); c < grid.end(); ++c) mass1 += u[c].rho * grid.volume[c];
  CHECK(mass1 == doctest::Approx(mass0).epsilon(1e-12));
}

TEST_CASE("run loop honors t_end and output times") {
  Problem1D prob = make_gaussian_bump(0.0, 0.0, 16, SchemeVariant::wellbalanced);

  SUBCASE("t_end = 0 leaves the initial state") {
    prob.time.t_end = 0.0;
    prob.time.output_times = {0.0};
    EulerSolver1D solver = prob.make_solver();
    const RunReport rep = run(solver, prob.initial, prob.time);
    CHECK(rep.steps == 0);
    CHECK(rep.final.t == 0.0);
    REQUIRE(rep.snapshots.size() == 1);
    CHECK(rep.snapshots[0].second[prob.grid.begin()].rho ==
          prob.initial.u[prob.grid.begin()].rho);
  }

  SUBCASE("t_end is hit exactly") {
    prob.time.t_end = 0.1234;
    EulerSolver1D solver = prob.make_solver();
    const RunReport rep = run(solver, prob.initial, prob.time);
    CHECK(rep.final.t == 0.1234);
  }
}

TEST_CASE("hydrostatic equilibrium run keeps the pressure field") {
  Problem1D prob = make_gaussian_bump(0.0, 0.0, 32, SchemeVariant::wellbalanced);
  EulerSolver1D solver = prob.make_solver();
  const auto p0 = interior_pressure(prob.initial.u, prob.grid, prob.eos);
  const RunReport rep = run(solver, prob.initial, prob.time);
  const auto p1 = interior_pressure(rep.final.u, prob.grid, prob.eos);
  CHECK(err1(p1, p0, prob.grid) <= 1e-13);
}

TEST_CASE("outflow boundaries copy the edge state") {
  const Grid1D grid = build_grid_1d(Geometry::cartesian, 0.0, 1.0, 8);
  const EosModel eos = EosModel::ideal(1.4);
  SchemeConfig scheme;
  scheme.set_variant(SchemeVariant::standard);
  EulerSolver1D solver(grid, eos, Potential::constant(), scheme);
  std::vector<ConsState> u(grid.n_total());
  for (int c = 0; c < grid.n_total(); ++c) {
    u[c] = to_conserved(PrimState{1.0 + 0.01 * c, 0.3, 1.0}, eos);
  }
  solver.set_boundary(BcKind::outflow, BcKind::outflow, u);
  solver.fill_ghosts(u);
  CHECK(u[0].rho == u[grid.begin()].rho);
  CHECK(u[1].rho == u[grid.begin()].rho);
  CHECK(u[grid.end()].rho == u[grid.end() - 1].rho);
  CHECK(u[grid.end() + 1].rho == u[grid.end() - 1].rho);
}

TEST_CASE("inadmissible interior data raise a step error") {
  const Grid1D grid = build_grid_1d(Geometry::cartesian, 0.0, 1.0, 8);
  const EosModel eos = EosModel::ideal(1.4);
  SchemeConfig scheme;
  EulerSolver1D solver(grid, eos, Potential::constant(), scheme);
  std::vector<ConsState> u(grid.n_total(), to_conserved(PrimState{1.0, 0.0, 1.0}, eos));
  solver.set_boundary(BcKind::frozen, BcKind::frozen, u);
  u[grid.begin() + 3].E = -1.0;  // negative internal energy
  CHECK_THROWS_AS(solver.spatial_operator(u), StepError);
}
