#include <cmath>
#include <random>

#include "support.hpp"

using namespace wbcu;
using wbcu::test::kGas;

TEST_SUITE("core") {

TEST_CASE("pressure from conserved variables") {
  CHECK(pressure_from_conserved(1.0, 0.0, 2.5, kGas) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pressure_from_conserved(1.0, 1.0, 3.0, kGas) == doctest::Approx(0.4 * (3.0 - 0.5)).epsilon(1e-15));
  CHECK(pressure_from_conserved(0.125, 0.0, 0.25, kGas) == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(pressure_from_conserved(1.0, 1.0, 1.0, 3.0, kGas) == doctest::Approx(0.4 * (3.0 - 1.0)).epsilon(1e-15));
  CHECK_THROWS_AS(pressure_from_conserved(0.0, 0.0, 1.0, kGas), DomainError);
  CHECK_THROWS_AS(pressure_from_conserved(-1.0, 0.0, 1.0, kGas), DomainError);
}

TEST_CASE("energy from pressure") {
  CHECK(energy_from_pressure(1.0, 0.0, 1.0, kGas) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(energy_from_pressure(1.0, 1.0, 1.0, kGas) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK_THROWS_AS(energy_from_pressure(1.0, 0.0, 0.0, kGas), DomainError);
  CHECK_THROWS_AS(energy_from_pressure(0.0, 0.0, 1.0, kGas), DomainError);
}

TEST_CASE("pressure and energy are mutually inverse") {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> pos(0.1, 5.0), vel(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double rho = pos(gen), p = pos(gen), mu = rho * vel(gen), mv = rho * vel(gen);
    CHECK(pressure_from_conserved(rho, mu, energy_from_pressure(rho, mu, p, kGas), kGas) ==
          doctest::Approx(p).epsilon(1e-12));
    CHECK(pressure_from_conserved(rho, mu, mv, energy_from_pressure(rho, mu, mv, p, kGas), kGas) ==
          doctest::Approx(p).epsilon(1e-12));
  }
}

TEST_CASE("sound speed") {
  CHECK(sound_speed(1.0, 1.0, kGas) == doctest::Approx(1.18321595662).epsilon(1e-11));
  CHECK(sound_speed(1.4, 1.0, kGas) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sound_speed(0.125, 0.1, kGas) == doctest::Approx(std::sqrt(1.4 * 0.1 / 0.125)).epsilon(1e-14));
  CHECK(sound_speed(0.125, 0.1, kGas) == doctest::Approx(1.05830).epsilon(1e-5));
  // c(s rho, s p) == c(rho, p)
  CHECK(sound_speed(3.0 * 0.7, 3.0 * 0.2, kGas) == doctest::Approx(sound_speed(0.7, 0.2, kGas)).epsilon(1e-14));
  CHECK_THROWS_AS(sound_speed(1.0, 0.0, kGas), DomainError);
  CHECK_THROWS_AS(sound_speed(0.0, 1.0, kGas), DomainError);
}

TEST_CASE("grid geometry") {
  const Grid1D g(0.0, 1.0, 100);
  CHECK(g.dy == doctest::Approx(0.01));
  CHECK(g.iface(0) == 0.0);
  CHECK(g.iface(100) == 1.0);
  CHECK(g.center(0) == doctest::Approx(0.005));
  CHECK(g.center(-1) == doctest::Approx(-0.005));
  const Grid2D g2(0.0, 3.0, 0.0, 3.0, 101, 101);
  CHECK(g2.xface(0) == 0.0);
  CHECK(g2.xface(101) == 3.0);
  CHECK(g2.yface(101) == 3.0);
  CHECK(g2.xc(50) == doctest::Approx(1.5));
  CHECK_THROWS_AS(Grid1D(0.0, 1.0, 2), UsageError);
  CHECK_THROWS_AS(Grid1D(1.0, 0.0, 10), UsageError);
  CHECK_THROWS_AS(Grid2D(0.0, 1.0, 0.0, 1.0, 10, 2), UsageError);
}

TEST_CASE("field arithmetic covers ghosts") {
  Field1D a(3, 1.0), b(3, 2.0);
  a += b;
  a *= 2.0;
  CHECK(a(-1) == 6.0);
  CHECK(a(3) == 6.0);
  CHECK(a.interior().size() == 3);
  Field2D c(3, 4, 1.0);
  c(-1, -1) = 5.0;
  CHECK(c(-1, -1) == 5.0);
  CHECK(c(3, 4) == 1.0);
  CHECK_THROWS_AS(a += Field1D(4), UsageError);
}

TEST_CASE("augmented energy") {
  const Grid1D g(0.0, 1.0, 3);
  SUBCASE("zero potential leaves energy unchanged") {
    const PotentialField1D phi(test::zero_potential_1d(), g);
    Field1D E(3, 2.5), rho(3, 1.0);
    const Field1D et = augment_energy(E, rho, phi);
    for (int k = -1; k <= 3; ++k) CHECK(et(k) == 2.5);
  }
  SUBCASE("linear potential at the midpoint") {
    const PotentialField1D phi(test::linear_potential_1d(), g);
    Field1D E(3, 2.5), rho(3, 1.0);
    const Field1D et = augment_energy(E, rho, phi);
    CHECK(g.center(1) == doctest::Approx(0.5));
    CHECK(et(1) == doctest::Approx(3.0).epsilon(1e-15));
    const Field1D back = deaugment_energy(et, rho, phi);
    for (int k = -1; k <= 3; ++k) CHECK(back(k) == doctest::Approx(2.5).epsilon(1e-15));
  }
  SUBCASE("2-D round trip") {
    const Grid2D g2(0.0, 1.0, 0.0, 1.0, 4, 3);
    const PotentialField2D phi({[](double x, double y) { return x + 2 * y; }, [](double, double) { return 1.0; },
                                [](double, double) { return 2.0; }},
                               g2);
    Field2D E(4, 3, 1.5), rho(4, 3, 0.5);
    const Field2D et = augment_energy(E, rho, phi);
    CHECK(et(2, 1) == doctest::Approx(1.5 + 0.5 * (g2.xc(2) + 2 * g2.yc(1))));
    const Field2D back = deaugment_energy(et, rho, phi);
    CHECK(back(3, 2) == doctest::Approx(1.5));
  }
}

TEST_CASE("sampled potential") {
  const Grid1D g(0.0, 1.0, 4);
  const PotentialField1D phi(test::linear_potential_1d(2.0), g);
  CHECK(phi.phi_iface.size() == 5);
  CHECK(phi.phi_iface[4] == doctest::Approx(2.0));
  CHECK(phi.phi_center(-1) == doctest::Approx(-0.25));
  CHECK(phi.dphi_center(4) == 2.0);
  const Grid2D g2(0.0, 1.0, 0.0, 2.0, 3, 4);
  const PotentialField2D p2({[](double x, double y) { return x * y; }, [](double, double y) { return y; },
                             [](double x, double) { return x; }},
                            g2);
  CHECK(p2.phi_xface.rows() == 4);
  CHECK(p2.phi_xface.cols() == 4);
  CHECK(p2.phi_yface.rows() == 3);
  CHECK(p2.phi_yface.cols() == 5);
  CHECK(p2.phi_xface(3, 1) == doctest::Approx(1.0 * g2.yc(1)));
  CHECK(p2.phi_yface(1, 4) == doctest::Approx(g2.xc(1) * 2.0));
}

TEST_CASE("primitive view") {
  const Grid1D g(0.0, 1.0, 3);
  const PotentialField1D phi(test::linear_potential_1d(), g);
  const ConservedState1D q = test::uniform_state_1d(3, 2.0, 0.5, 1.0, phi);
  const Primitive1D w = primitive_at(q, phi, kGas, 1);
  CHECK(w.rho == 2.0);
  CHECK(w.v == doctest::Approx(0.5));
  CHECK(w.p == doctest::Approx(1.0).epsilon(1e-14));
  ConservedState1D bad = q;
  bad.rho(2) = 0.0;
  CHECK_THROWS_AS(primitive_at(bad, phi, kGas, 2), DomainError);
}

}  // TEST_SUITE
