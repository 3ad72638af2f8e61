#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wbflow/eos.hpp"
#include "wbflow/state.hpp"

using namespace wbflow;

TEST_CASE("ideal gas pressure and internal energy") {
  const EosModel eos = EosModel::ideal(5.0 / 3.0);
  CHECK(eos.pressure(1.0, 1.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(eos.internal_energy(1.0, 1.0) == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("stiffened gas closure") {
  const EosModel eos = EosModel::stiffened(1.4, 0.5);
  // p = 0.4 * 4 - 1.4 * 0.5
  CHECK(eos.pressure(1.0, 4.0) == doctest::Approx(0.9).epsilon(1e-15));
  CHECK(eos.sound_speed(1.0, 0.9) == doctest::Approx(1.4).epsilon(1e-15));
  CHECK(eos.entropy_param(1.0, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("sound speed normalization") {
  const double g = 5.0 / 3.0;
  const EosModel eos = EosModel::ideal(g);
  CHECK(eos.sound_speed(1.0, 1.0) == doctest::Approx(std::sqrt(g)).epsilon(1e-15));
  CHECK(eos.sound_speed(g, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("entropy parameter") {
  const double g = 5.0 / 3.0;
  const EosModel eos = EosModel::ideal(g);
  CHECK(eos.entropy_param(1.0, 1.0) == 1.0);
  CHECK(eos.entropy_param(2.0, std::pow(2.0, g)) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("enthalpy closed forms") {
  const EosModel eos = EosModel::ideal(5.0 / 3.0);
  CHECK(eos.enthalpy(1.0, 1.0) == doctest::Approx(2.5).epsilon(1e-15));

  // gamma = 4/3 anchor with c0^2 = 1/2: p0 = rho0 c0^2 / gamma, h = c0^2/(gamma-1).
  const EosModel eos43 = EosModel::ideal(4.0 / 3.0);
  const double p0 = 0.5 / eos43.gamma;
  const double k0 = eos43.entropy_param(1.0, p0);
  CHECK(eos43.enthalpy(1.0, k0) == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("dh/drho equals c^2/rho at fixed entropy") {
  for (const EosModel& eos : {EosModel::ideal(5.0 / 3.0), EosModel::stiffened(1.4, 0.5)}) {
    for (double rho : {0.3, 1.0, 4.2}) {
      const double k = 0.8;
      const double d = 1e-6 * rho;
      const double fd = (eos.enthalpy(rho + d, k) - eos.enthalpy(rho - d, k)) / (2.0 * d);
      const double exact = eos.sound_speed2_at_entropy(rho, k) / rho;
      CHECK(fd == doctest::Approx(exact).epsilon(1e-9));
    }
  }
}

TEST_CASE("pressure/energy round trip on random admissible states") {
  std::mt19937_64 rng(20240117);
  std::uniform_real_distribution<double> logu(-3.0, 3.0);
  for (const EosModel& eos : {EosModel::ideal(5.0 / 3.0), EosModel::ideal(1.4),
                              EosModel::stiffened(1.4, 0.5), EosModel::stiffened(2.2, 3.0)}) {
    for (int i = 0; i < 10000; ++i) {
      const double rho = std::exp(logu(rng));
      const double p = std::exp(logu(rng));
      const double e = eos.internal_energy(rho, p);
      const double back = eos.pressure(rho, e);
      CHECK(std::abs(back - p) <= 1e-14 * (std::abs(p) + eos.gamma * eos.p_inf));
    }
  }
}

TEST_CASE("convexity: second density derivative of p positive on the isentrope") {
  for (const EosModel& eos : {EosModel::ideal(5.0 / 3.0), EosModel::stiffened(1.4, 0.5)}) {
    const double k = 1.3;
    for (int i = 0; i <= 40; ++i) {
      const double rho = std::pow(10.0, -2.0 + 4.0 * i / 40.0);
      const double d = 1e-4 * rho;
      const double second = (eos.pressure_at_entropy(rho + d, k) -
                             2.0 * eos.pressure_at_entropy(rho, k) +
                             eos.pressure_at_entropy(rho - d, k)) /
                            (d * d);
      CHECK(second > 0.0);
    }
  }
}

TEST_CASE("domain errors on inadmissible inputs") {
  const EosModel eos = EosModel::ideal(5.0 / 3.0);
  CHECK_THROWS_AS(eos.sound_speed(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(eos.sound_speed(1.0, -1.0), std::domain_error);
  CHECK_THROWS_AS(eos.entropy_param(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(eos.pressure(1.0, std::nan("")), std::domain_error);
  CHECK_THROWS_AS(EosModel::ideal(1.0), std::domain_error);
  CHECK_THROWS_AS(EosModel::stiffened(1.4, -0.1), std::domain_error);

  const EosModel sg = EosModel::stiffened(1.4, 0.5);
  // p slightly below -p_inf is inadmissible even though p < 0 alone is not.
  CHECK_THROWS_AS(sg.sound_speed(1.0, -0.6), std::domain_error);
  CHECK_NOTHROW(sg.sound_speed(1.0, -0.4));
}
