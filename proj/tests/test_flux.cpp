#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "wbflow/flux.hpp"
#include "wbflow/problems.hpp"

using namespace wbflow;

namespace {

PrimState random_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return {0.1 + 3.0 * u(rng), 4.0 * (u(rng) - 0.5), 0.1 + 3.0 * u(rng)};
}

double max_abs(const FluxVector& f) {
  return std::max({std::abs(f.mass), std::abs(f.mom), std::abs(f.energy)});
}

FluxVector sub(const FluxVector& a, const FluxVector& b) {
  return {a.mass - b.mass, a.mom - b.mom, a.energy - b.energy};
}

}  // namespace

TEST_CASE("physical flux closed forms") {
  const EosModel eos = EosModel::ideal(5.0 / 3.0);

  const FluxVector rest = physical_flux({1.0, 0.0, 1.0}, eos);
  CHECK(rest.mass == 0.0);
  CHECK(rest.mom == 1.0);
  CHECK(rest.energy == 0.0);

  // E = 3/2 + 1/2 = 2 at (1, 1, 1).
  const FluxVector f = physical_flux({1.0, 1.0, 1.0}, eos);
  CHECK(f.mass == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(f.mom == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(f.energy == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("transverse momentum advection in the directional flux") {
  const EosModel eos = EosModel::ideal(1.4);
  const PrimState2 w{2.0, 0.7, -0.3, 1.1};
  const FluxVector2 f = physical_flux_normal(w, eos);
  CHECK(f.momt == doctest::Approx(2.0 * 0.7 * -0.3).epsilon(1e-15));
  CHECK(f.mass == doctest::Approx(2.0 * 0.7).epsilon(1e-15));
}

TEST_CASE("consistency on coincident states") {
  std::mt19937_64 rng(11223344);
  const EosModel eos = EosModel::ideal(1.4);
  for (int i = 0; i < 10000; ++i) {
    const PrimState w = random_state(rng);
    const FluxVector f = physical_flux(w, eos);
    const FluxVector fh = hlle(w, w, eos);
    const FluxVector fc = hllc(w, w, eos);
    CHECK(fh.mass == f.mass);
    CHECK(fh.mom == f.mom);
    CHECK(fh.energy == f.energy);
    CHECK(fc.mass == f.mass);
    CHECK(fc.mom == f.mom);
    CHECK(fc.energy == f.energy);
  }
}

TEST_CASE("upwinding for supersonic data") {
  const EosModel eos = EosModel::ideal(1.4);
  // Everything moves left faster than sound: the right state decides.
  const PrimState l{1.0, -5.0, 1.0};
  const PrimState r{0.8, -5.5, 0.9};
  const FluxVector f = hlle(l, r, eos);
  const FluxVector fr = physical_flux(r, eos);
  CHECK(f.mass == fr.mass);
  CHECK(f.mom == fr.mom);
  CHECK(f.energy == fr.energy);

  const PrimState lr{1.0, 5.0, 1.0};
  const PrimState rr{0.8, 5.5, 0.9};
  const FluxVector g = hllc(lr, rr, eos);
  const FluxVector fl = physical_flux(lr, eos);
  CHECK(g.mass == fl.mass);
}

TEST_CASE("stationary shock pair passes through unchanged") {
  const EosModel eos = EosModel::ideal(4.0 / 3.0);
  const PrimState pre{1.0, -1.2 * std::sqrt(0.5), 0.5 / eos.gamma};
  const ShockPair rh = rankine_hugoniot_stationary(pre, 1.2, eos);

  const FluxVector f_post = physical_flux(rh.post, eos);
  const FluxVector f_pre = physical_flux(rh.pre, eos);
  CHECK(max_abs(sub(f_post, f_pre)) <= 1e-12);

  // Post-shock (subsonic) below, pre-shock (supersonic) above.
  const FluxVector f = hlle(rh.post, rh.pre, eos);
  CHECK(max_abs(sub(f, f_pre)) <= 1e-12);
}

TEST_CASE("stationary contact resolved exactly by hllc") {
  const EosModel eos = EosModel::ideal(1.4);
  const PrimState l{1.0, 0.0, 0.7};
  const PrimState r{3.3, 0.0, 0.7};
  const FluxVector f = hllc(l, r, eos);
  CHECK(f.mass == 0.0);
  CHECK(f.mom == 0.7);
  CHECK(f.energy == 0.0);
}

TEST_CASE("sod-type interface flux matches a fine riemann fan average") {
  // Evolve the Riemann problem on a fine first-order grid and compare the
  // conservation-integral average of the fan, (s_r u_r - s_l u_l - (f_r -
  // f_l)) / (s_r - s_l), against the average induced by the HLLC star states.
  const EosModel eos = EosModel::ideal(1.4);
  const PrimState wl{1.0, 0.0, 1.0};
  const PrimState wr{0.125, 0.0, 0.1};

  const int n = 4096;
  const double L = 1.0;
  const double dx = 2.0 * L / n;
  std::vector<ConsState> u(n);
  for (int i = 0; i < n; ++i) {
    const double x = -L + (i + 0.5) * dx;
    u[i] = to_conserved(x < 0.0 ? wl : wr, eos);
  }
  const double t_final = 0.25;
  double t = 0.0;
  std::vector<ConsState> un(n);
  while (t < t_final) {
    double smax = 0.0;
    for (const ConsState& s : u) {
      const PrimState w = to_primitive(s, eos);
      smax = std::max(smax, std::abs(w.v) + eos.sound_speed(w.rho, w.p));
    }
    double dt = 0.45 * dx / smax;
    if (t + dt > t_final) dt = t_final - t;
    for (int i = 0; i < n; ++i) {
      const PrimState wm = to_primitive(u[std::max(i - 1, 0)], eos);
      const PrimState wc = to_primitive(u[i], eos);
      const PrimState wp = to_primitive(u[std::min(i + 1, n - 1)], eos);
      const FluxVector fl = hlle(wm, wc, eos);
      const FluxVector fr = hlle(wc, wp, eos);
      un[i] = {u[i].rho - dt / dx * (fr.mass - fl.mass),
               u[i].mom - dt / dx * (fr.mom - fl.mom),
               u[i].E - dt / dx * (fr.energy - fl.energy)};
    }
    u.swap(un);
    t += dt;
  }

  // Wave-speed estimates of the single interface call under test.
  const ConsState ul = to_conserved(wl, eos), ur = to_conserved(wr, eos);
  const double cl = eos.sound_speed(wl.rho, wl.p), cr = eos.sound_speed(wr.rho, wr.p);
  // Generous fan bounds for the averaging window.
  const double sl = wl.v - 2.0 * cl, sr = wr.v + 2.0 * cr;

  auto fan_average = [&](auto pick) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = -L + (i + 0.5) * dx;
      if (x >= sl * t_final && x <= sr * t_final) acc += pick(u[i]) * dx;
    }
    return acc / ((sr - sl) * t_final);
  };
  const double fan_rho = fan_average([](const ConsState& s) { return s.rho; });
  const double fan_mom = fan_average([](const ConsState& s) { return s.mom; });
  const double fan_E = fan_average([](const ConsState& s) { return s.E; });

  // The same integral from the flux function: u* = (s_r u_r - s_l u_l - (f_r
  // - f_l)) / (s_r - s_l) with f evaluated through the solver's own interface
  // flux via F = f_l - s_l (u* - u_l) rearranged; equivalently use the exact
  // conservation statement with the physical fluxes of the outer states.
  const FluxVector fl = physical_flux(wl, eos);
  const FluxVector fr = physical_flux(wr, eos);
  const double star_rho = (sr * ur.rho - sl * ul.rho - (fr.mass - fl.mass)) / (sr - sl);
  const double star_mom = (sr * ur.mom - sl * ul.mom - (fr.mom - fl.mom)) / (sr - sl);
  const double star_E = (sr * ur.E - sl * ul.E - (fr.energy - fl.energy)) / (sr - sl);

  CHECK(fan_rho == doctest::Approx(star_rho).epsilon(1e-3));
  CHECK(fan_mom == doctest::Approx(star_mom).epsilon(1e-3).scale(1.0));
  CHECK(fan_E == doctest::Approx(star_E).epsilon(1e-3));

  // Sanity envelope for the solver fluxes on these states.
  for (FluxKind kind : {FluxKind::hlle, FluxKind::hllc}) {
    const FluxVector f = riemann_flux(kind, wl, wr, eos);
    CHECK(f.mass > std::min(fl.mass, fr.mass) - 1.0);
    CHECK(f.mass < std::max(fl.mass, fr.mass) + 1.0);
    CHECK(std::isfinite(f.energy));
  }
}

TEST_CASE("small input perturbations stay small in the flux") {
  std::mt19937_64 rng(555);
  const EosModel eos = EosModel::ideal(1.4);
  for (int i = 0; i < 2000; ++i) {
    const PrimState l = random_state(rng);
    const PrimState r = random_state(rng);
    for (FluxKind kind : {FluxKind::hlle, FluxKind::hllc}) {
      const FluxVector f0 = riemann_flux(kind, l, r, eos);
      PrimState lp = l;
      lp.rho *= 1.0 + 1e-8;
      lp.v *= 1.0 - 1e-8;
      lp.p *= 1.0 + 1e-8;
      const FluxVector f1 = riemann_flux(kind, lp, r, eos);
      const double scale =
          1.0 + std::max(max_abs(f0), std::abs(l.rho * l.v * l.v) + l.p + l.rho);
      CHECK(max_abs(sub(f1, f0)) <= 1e-6 * scale);
    }
  }
}

TEST_CASE("directional solvers agree with the 1d solvers at zero transverse velocity") {
  std::mt19937_64 rng(777);
  const EosModel eos = EosModel::ideal(5.0 / 3.0);
  for (int i = 0; i < 500; ++i) {
    const PrimState l = random_state(rng);
    const PrimState r = random_state(rng);
    const PrimState2 l2{l.rho, l.v, 0.0, l.p};
    const PrimState2 r2{r.rho, r.v, 0.0, r.p};
    for (FluxKind kind : {FluxKind::hlle, FluxKind::hllc}) {
      const FluxVector f1 = riemann_flux(kind, l, r, eos);
      const FluxVector2 f2 = riemann_flux_normal(kind, l2, r2, eos);
      CHECK(f2.mass == doctest::Approx(f1.mass).epsilon(1e-14).scale(1.0));
      CHECK(f2.momn == doctest::Approx(f1.mom).epsilon(1e-14).scale(1.0));
      CHECK(f2.energy == doctest::Approx(f1.energy).epsilon(1e-14).scale(1.0));
      CHECK(f2.momt == 0.0);
    }
  }
}
