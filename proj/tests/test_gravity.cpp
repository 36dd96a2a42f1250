#include <cmath>
#include <random>

#include "support.hpp"
#include "wbcu/problems.hpp"

using namespace wbcu;
using wbcu::test::kGas;

namespace {

Potential2D sum_potential() {
  return {[](double x, double y) { return x + y; }, [](double, double) { return 1.0; },
          [](double, double) { return 1.0; }};
}

Field1D exp_density(const Grid1D& g) {
  Field1D rho(g.n_cells);
  for (int k = 0; k < g.n_cells; ++k) rho(k) = std::exp(-g.center(k));
  return rho;
}

// Interior L1 distance between the constructed state and 1.21 exp(-1.21 (x + y)).
double steady_2d_density_error(int n) {
  const Grid2D g(0.0, 1.0, 0.0, 1.0, n, n);
  const PotentialField2D phi(sum_potential(), g);
  std::vector<double> L, K;
  for (int j = 0; j < n; ++j) L.push_back(std::exp(-1.21 * g.xc(j)));
  for (int k = 0; k < n; ++k) K.push_back(std::exp(-1.21 * (g.x_right + g.yc(k))));
  const ConservedState2D q = steady_state_2d(L, K, phi, g, kGas);
  double err = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) err += std::abs(q.rho(j, k) - 1.21 * std::exp(-1.21 * (g.xc(j) + g.yc(k)))) * g.dx * g.dy;
  return err;
}

}  // namespace

TEST_SUITE("gravity") {

TEST_CASE("R for constant density and unit gravity") {
  const Grid1D g(0.0, 0.4, 4);
  const PotentialField1D phi(test::linear_potential_1d(), g);
  const EquilibriumField1D eq = compute_R_1d(Field1D(4, 1.0), phi, g);
  const double iface[] = {0.0, 0.1, 0.2, 0.3, 0.4};
  const double center[] = {0.05, 0.15, 0.25, 0.35};
  REQUIRE(eq.R_iface.size() == 5);
  for (int k = 0; k < 5; ++k) CHECK(eq.R_iface[static_cast<std::size_t>(k)] == doctest::Approx(iface[k]).epsilon(1e-14));
  for (int k = 0; k < 4; ++k) CHECK(eq.R_center(k) == doctest::Approx(center[k]).epsilon(1e-14));
}

TEST_CASE("R vanishes for a constant potential") {
  const Grid1D g(0.0, 1.0, 5);
  const PotentialField1D phi(test::zero_potential_1d(), g);
  const EquilibriumField1D eq = compute_R_1d(exp_density(g), phi, g);
  for (double r : eq.R_iface) CHECK(r == 0.0);
  for (int k = -1; k <= 5; ++k) CHECK(eq.R_center(k) == 0.0);
}

TEST_CASE("R for exponential density matches a hand recursion") {
  const Grid1D g(0.0, 1.0, 4);
  const PotentialField1D phi(test::linear_potential_1d(), g);
  const Field1D rho = exp_density(g);
  const EquilibriumField1D eq = compute_R_1d(rho, phi, g);
  double sum = 0.0;
  for (int k = 0; k < 4; ++k) {
    sum += std::exp(-(0.125 + 0.25 * k));
    CHECK(eq.R_iface[static_cast<std::size_t>(k + 1)] == doctest::Approx(0.25 * sum).epsilon(1e-14));
    CHECK(eq.R_center(k) ==
          doctest::Approx(0.5 * (eq.R_iface[static_cast<std::size_t>(k)] + eq.R_iface[static_cast<std::size_t>(k + 1)]))
              .epsilon(1e-15));
  }
  CHECK(eq.R_iface[1] == doctest::Approx(0.2206242).epsilon(1e-7));
}

TEST_CASE("R telescopes to the total weighted mass") {
  const Grid1D g(0.0, 1.0, 37);
  const PotentialField1D phi(make_potential_1d(PotentialKind::sine), g);
  std::mt19937 gen(3);
  std::uniform_real_distribution<double> d(0.5, 2.0);
  Field1D rho(37);
  double total = 0.0;
  for (int k = 0; k < 37; ++k) {
    rho(k) = d(gen);
    total += g.dy * rho(k) * phi.dphi_center(k);
  }
  const EquilibriumField1D eq = compute_R_1d(rho, phi, g);
  CHECK(eq.R_iface.back() == doctest::Approx(total).epsilon(1e-13));
}

TEST_CASE("Q and R for constant density with half-unit cells") {
  // Grids need three cells per direction; the first two columns and rows carry the 2x2 values.
  const Grid2D g3(0.0, 1.5, 0.0, 1.5, 3, 3);
  const PotentialField2D phi(sum_potential(), g3);
  const EquilibriumField2D eq = compute_QR_2d(Field2D(3, 3, 1.0), phi, g3);
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j <= 3; ++j) CHECK(eq.Q_iface(j, k) == doctest::Approx(0.5 * j).epsilon(1e-15));
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k <= 3; ++k) CHECK(eq.R_iface(j, k) == doctest::Approx(0.5 * k).epsilon(1e-15));
}

TEST_CASE("Q and R vanish for a constant potential") {
  const Grid2D g(0.0, 1.0, 0.0, 1.0, 4, 3);
  const PotentialField2D phi(test::zero_potential_2d(), g);
  const EquilibriumField2D eq = compute_QR_2d(Field2D(4, 3, 2.0), phi, g);
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 3; ++k) {
      CHECK(eq.Q_center(j, k) == 0.0);
      CHECK(eq.R_center(j, k) == 0.0);
    }
}

TEST_CASE("Q and R for exponential density on a 3x3 grid") {
  const Grid2D g(0.0, 1.0, 0.0, 1.0, 3, 3);
  const PotentialField2D phi(sum_potential(), g);
  Field2D rho(3, 3);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) rho(j, k) = 1.21 * std::exp(-1.21 * (g.xc(j) + g.yc(k)));
  const EquilibriumField2D eq = compute_QR_2d(rho, phi, g);
  for (int k = 0; k < 3; ++k) {
    double s = 0.0;
    for (int j = 0; j < 3; ++j) {
      s += std::exp(-1.21 * (g.xc(j) + g.yc(k)));
      CHECK(eq.Q_iface(j + 1, k) == doctest::Approx(1.21 * g.dx * s).epsilon(1e-14));
    }
  }
  for (int j = 0; j < 3; ++j) {
    double s = 0.0;
    for (int k = 0; k < 3; ++k) {
      s += std::exp(-1.21 * (g.xc(j) + g.yc(k)));
      CHECK(eq.R_iface(j, k + 1) == doctest::Approx(1.21 * g.dy * s).epsilon(1e-14));
      CHECK(eq.R_center(j, k) == doctest::Approx(0.5 * (eq.R_iface(j, k) + eq.R_iface(j, k + 1))).epsilon(1e-15));
    }
  }
}

TEST_CASE("quadratic R for a linear potential") {
  SUBCASE("centre values of piecewise-constant density") {
    const Grid1D g(0.0, 3.0, 3);
    const std::vector<double> rho{1.0, 2.0, 3.0}, s{0.0, 0.0, 0.0};
    CHECK(quadratic_R_linear_potential(rho, s, 1.0, g, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(quadratic_R_linear_potential(rho, s, 1.0, g, 1.5) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(quadratic_R_linear_potential(rho, s, 1.0, g, 2.0) == doctest::Approx(3.0).epsilon(1e-15));
  }
  SUBCASE("constant density gives a linear profile") {
    const Grid1D g(0.0, 1.0, 4);
    const std::vector<double> rho(4, 1.5), s(4, 0.0);
    for (int k = 0; k < 4; ++k) {
      const double c = quadratic_R_linear_potential(rho, s, 2.0, g, g.center(k));
      const double lo = quadratic_R_linear_potential(rho, s, 2.0, g, g.iface(k));
      const double hi = quadratic_R_linear_potential(rho, s, 2.0, g, g.iface(k + 1));
      CHECK(c == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-15));
      CHECK(c == doctest::Approx(3.0 * g.center(k)).epsilon(1e-14));
    }
  }
  SUBCASE("interface values equal the midpoint recursion exactly") {
    const Grid1D g(0.0, 1.0, 16);
    const PotentialField1D phi(test::linear_potential_1d(0.7), g);
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> d(0.5, 2.0), sd(-1.0, 1.0);
    std::vector<double> rho, s;
    Field1D f(16);
    for (int k = 0; k < 16; ++k) {
      rho.push_back(d(gen));
      s.push_back(sd(gen));
      f(k) = rho.back();
    }
    const EquilibriumField1D eq = compute_R_1d(f, phi, g);
    for (int k = 0; k <= 16; ++k)
      CHECK(quadratic_R_linear_potential(rho, s, 0.7, g, g.iface(k)) == eq.R_iface[static_cast<std::size_t>(k)]);
  }
  SUBCASE("points outside the domain are rejected") {
    const Grid1D g(0.0, 1.0, 4);
    const std::vector<double> rho(4, 1.0), s(4, 0.0);
    CHECK_THROWS_AS(quadratic_R_linear_potential(rho, s, 1.0, g, 1.5), DomainError);
  }
}

TEST_CASE("1-D steady state") {
  SUBCASE("constant potential") {
    const Grid1D g(0.0, 1.0, 5);
    const PotentialField1D phi(test::zero_potential_1d(), g);
    const std::vector<double> rho{1.0, 2.0, 3.0, 2.0, 1.0};
    const ConservedState1D q = steady_state_1d(rho, 0.8, phi, g, kGas);
    for (int k = 0; k < 5; ++k) {
      CHECK(q.mom_y(k) == 0.0);
      CHECK(q.energy_tot(k) == doctest::Approx(0.8 / 0.4).epsilon(1e-15));
    }
  }
  SUBCASE("isothermal profile on four cells") {
    const Grid1D g(0.0, 1.0, 4);
    const PotentialField1D phi(test::linear_potential_1d(), g);
    const Field1D rho = exp_density(g);
    const ConservedState1D q = steady_state_1d(rho.interior(), 1.0, phi, g, kGas);
    const EquilibriumField1D eq = compute_R_1d(q.rho, phi, g);
    const double R0 = 0.5 * 0.25 * std::exp(-0.125);
    CHECK(test::max_abs(q.mom_y) == 0.0);
    const double p0 = primitive_at(q, phi, kGas, 0).p;
    CHECK(p0 == doctest::Approx(1.0 - R0).epsilon(1e-14));
    CHECK(p0 == doctest::Approx(0.8896879).epsilon(1e-7));
    for (int k = 0; k < 4; ++k)
      CHECK(primitive_at(q, phi, kGas, k).p + eq.R_center(k) == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("non-positive pressure is a construction error") {
    const Grid1D g(0.0, 1.0, 4);
    const PotentialField1D phi(test::linear_potential_1d(), g);
    const std::vector<double> rho(4, 10.0);
    CHECK_THROWS_AS(steady_state_1d(rho, 1.0, phi, g, kGas), ConstructionError);
  }
}

TEST_CASE("2-D steady state") {
  SUBCASE("constant potential is degenerate") {
    const Grid2D g(0.0, 1.0, 0.0, 1.0, 4, 4);
    const PotentialField2D phi(test::zero_potential_2d(), g);
    const std::vector<double> L(4, 1.0), K(4, 1.0);
    CHECK_THROWS_WITH_AS(steady_state_2d(L, K, phi, g, kGas), doctest::Contains("degenerate"), ConstructionError);
  }
  SUBCASE("density approaches the isothermal profile at second order") {
    const double e4 = steady_2d_density_error(4), e8 = steady_2d_density_error(8);
    CHECK(e4 < 0.05);
    CHECK(std::log2(e4 / e8) == doctest::Approx(2.0).epsilon(0.15));
  }
  SUBCASE("K depends on the row only and L on the column only") {
    const int n = 12;
    const Grid2D g(0.0, 1.0, 0.0, 1.0, n, n);
    const PotentialField2D phi(sum_potential(), g);
    std::vector<double> L, K;
    for (int j = 0; j < n; ++j) L.push_back(std::exp(-1.21 * g.xc(j)));
    for (int k = 0; k < n; ++k) K.push_back(std::exp(-1.21 * (1.0 + g.yc(k))));
    const ConservedState2D q = steady_state_2d(L, K, phi, g, kGas);
    Field2D rho(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) rho(j, k) = q.rho(j, k);
    const EquilibriumField2D eq = compute_QR_2d(rho, phi, g);
    // Q is anchored at the left face here and at the right face in the constructor.
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double p = primitive_at(q, phi, kGas, j, k).p;
        CHECK(p + eq.Q_center(j, k) - eq.Q_iface(n, k) == doctest::Approx(K[static_cast<std::size_t>(k)]).epsilon(1e-13));
        CHECK(p + eq.R_center(j, k) == doctest::Approx(L[static_cast<std::size_t>(j)]).epsilon(1e-13));
      }
  }
  SUBCASE("profile sizes are validated") {
    const Grid2D g(0.0, 1.0, 0.0, 1.0, 4, 4);
    const PotentialField2D phi(sum_potential(), g);
    const std::vector<double> L(3, 1.0), K(4, 1.0);
    CHECK_THROWS_AS(steady_state_2d(L, K, phi, g, kGas), UsageError);
  }
}

}  // TEST_SUITE
