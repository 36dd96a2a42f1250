#include "wbcu/problems.hpp"

#include <cmath>
#include <numbers>

namespace wbcu {

Potential1D make_potential_1d(PotentialKind kind) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  switch (kind) {
    case PotentialKind::linear:
      return {[](double y) { return y; }, [](double) { return 1.0; }};
    case PotentialKind::quadratic:
      return {[](double y) { return 0.5 * y * y; }, [](double y) { return y; }};
    case PotentialKind::sine:
      return {[=](double y) { return std::sin(two_pi * y); }, [=](double y) { return two_pi * std::cos(two_pi * y); }};
  }
  throw UsageError("unknown potential kind");
}

ProblemSpec1D sod_tube() {
  ProblemSpec1D p;
  p.name = "sod";
  p.potential = make_potential_1d(PotentialKind::linear);
  p.bc = {BoundaryKind::reflecting, BoundaryKind::reflecting};
  p.t_final = 0.2;
  p.default_n = 100;
  const Potential1D pot = p.potential;
  p.initial = [pot](const Grid1D& g, const GasParams& gas) {
    const PotentialField1D phi(pot, g);
    ConservedState1D q(g.n_cells);
    for (int k = 0; k < g.n_cells; ++k) {
      const bool left = g.center(k) <= 0.5;
      const double rho = left ? 1.0 : 0.125;
      const double pr = left ? 1.0 : 0.1;
      q.rho(k) = rho;
      q.mom_y(k) = 0.0;
      q.energy_tot(k) = energy_from_pressure(rho, 0.0, pr, gas) + rho * phi.phi_center(k);
    }
    return q;
  };
  return p;
}

ProblemSpec1D isothermal_1d(PotentialKind kind, double eta, double center, double width) {
  if (eta < 0.0) throw UsageError("perturbation amplitude must be non-negative");
  static const char* names[] = {"isothermal-linear", "isothermal-quadratic", "isothermal-sine"};
  ProblemSpec1D p;
  p.name = names[static_cast<int>(kind)];
  p.potential = make_potential_1d(kind);
  p.bc = {BoundaryKind::hydrostatic_zero_order, BoundaryKind::hydrostatic_zero_order};
  p.t_final = 0.25;
  p.default_n = 100;
  p.eta = eta;
  const Potential1D pot = p.potential;
  p.equilibrium = [pot](const Grid1D& g, const GasParams& gas) {
    const PotentialField1D phi(pot, g);
    std::vector<double> rho(static_cast<std::size_t>(g.n_cells));
    for (int k = 0; k < g.n_cells; ++k) rho[static_cast<std::size_t>(k)] = std::exp(-pot.phi(g.center(k)));
    return steady_state_1d(rho, 1.0, phi, g, gas);
  };
  p.initial = [eq = p.equilibrium, eta, center, width](const Grid1D& g, const GasParams& gas) {
    ConservedState1D q = eq(g, gas);
    for (int k = 0; k < g.n_cells; ++k) {
      const double d = g.center(k) - center;
      q.energy_tot(k) += eta * std::exp(-width * d * d) / (gas.gamma - 1.0);
    }
    return q;
  };
  return p;
}

ProblemSpec2D isothermal_2d(double eta) {
  if (eta < 0.0) throw UsageError("perturbation amplitude must be non-negative");
  ProblemSpec2D p;
  p.name = "isothermal-2d";
  p.potential = {[](double x, double y) { return x + y; }, [](double, double) { return 1.0; },
                 [](double, double) { return 1.0; }};
  const BoundaryKind h = BoundaryKind::hydrostatic_zero_order;
  p.bc = {h, h, h, h};
  p.t_final = 0.15;
  p.eta = eta;
  const Potential2D pot = p.potential;
  p.equilibrium = [pot](const Grid2D& g, const GasParams& gas) {
    const PotentialField2D phi(pot, g);
    std::vector<double> L(static_cast<std::size_t>(g.nx)), K(static_cast<std::size_t>(g.ny));
    for (int j = 0; j < g.nx; ++j) L[static_cast<std::size_t>(j)] = std::exp(-1.21 * g.xc(j));
    for (int k = 0; k < g.ny; ++k) K[static_cast<std::size_t>(k)] = std::exp(-1.21 * (g.x_right + g.yc(k)));
    return steady_state_2d(L, K, phi, g, gas);
  };
  p.initial = [eq = p.equilibrium, eta](const Grid2D& g, const GasParams& gas) {
    ConservedState2D q = eq(g, gas);
    for (int j = 0; j < g.nx; ++j) {
      for (int k = 0; k < g.ny; ++k) {
        const double dx = g.xc(j) - 0.3, dy = g.yc(k) - 0.3;
        q.energy_tot(j, k) += eta * std::exp(-121.0 * (dx * dx + dy * dy)) / (gas.gamma - 1.0);
      }
    }
    return q;
  };
  return p;
}

ProblemSpec2D explosion_2d() {
  ProblemSpec2D p;
  p.name = "explosion";
  p.x_right = 3.0;
  p.y_right = 3.0;
  p.potential = {[](double, double y) { return 0.118 * y; }, [](double, double) { return 0.0; },
                 [](double, double) { return 0.118; }};
  const BoundaryKind h = BoundaryKind::hydrostatic_zero_order;
  p.bc = {h, h, h, h};
  p.t_final = 2.4;
  p.default_nx = 101;
  p.default_ny = 101;
  p.output_times = {1.2, 1.8, 2.4};
  const Potential2D pot = p.potential;
  p.initial = [pot](const Grid2D& g, const GasParams& gas) {
    const PotentialField2D phi(pot, g);
    ConservedState2D q(g.nx, g.ny);
    for (int j = 0; j < g.nx; ++j) {
      for (int k = 0; k < g.ny; ++k) {
        const double x = g.xc(j), y = g.yc(k);
        const double r2 = (x - 1.5) * (x - 1.5) + (y - 1.5) * (y - 1.5);
        const double pr = 1.0 - pot.phi(x, y) + (r2 < 0.01 ? 0.005 : 0.0);
        q.rho(j, k) = 1.0;
        q.energy_tot(j, k) = energy_from_pressure(1.0, 0.0, 0.0, pr, gas) + phi.phi_center(j, k);
      }
    }
    return q;
  };
  return p;
}

ProblemSpec make_problem(const std::string& name, std::optional<double> eta) {
  if (name == "sod") return sod_tube();
  if (name == "isothermal-linear") return isothermal_1d(PotentialKind::linear, eta.value_or(1e-2));
  if (name == "isothermal-quadratic") return isothermal_1d(PotentialKind::quadratic, eta.value_or(1e-3));
  if (name == "isothermal-sine") return isothermal_1d(PotentialKind::sine, eta.value_or(1e-3));
  if (name == "isothermal-2d") return isothermal_2d(eta.value_or(1e-6));
  if (name == "explosion") return explosion_2d();
  throw UsageError("unknown problem '" + name + "'");
}

std::vector<std::string> problem_names() {
  return {"sod", "isothermal-linear", "isothermal-quadratic", "isothermal-sine", "isothermal-2d", "explosion"};
}

std::vector<double> pressure_1d(const ConservedState1D& q, const PotentialField1D& phi, const GasParams& gas) {
  std::vector<double> p(static_cast<std::size_t>(q.rho.n()));
  for (int k = 0; k < q.rho.n(); ++k) p[static_cast<std::size_t>(k)] = primitive_at(q, phi, gas, k).p;
  return p;
}

Field2D pressure_2d(const ConservedState2D& q, const PotentialField2D& phi, const GasParams& gas) {
  Field2D p(q.rho.nx(), q.rho.ny());
  for (int j = 0; j < q.rho.nx(); ++j)
    for (int k = 0; k < q.rho.ny(); ++k) p(j, k) = primitive_at(q, phi, gas, j, k).p;
  return p;
}

}  // namespace wbcu
