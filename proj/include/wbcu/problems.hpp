// Test problems: Sod-type shock tube in a gravitational field, isothermal
// equilibria with pressure perturbations (1-D and 2-D), and a 2-D explosion.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wbcu/evolution.hpp"

namespace wbcu {

struct ProblemSpec1D {
  using Builder = std::function<ConservedState1D(const Grid1D&, const GasParams&)>;

  std::string name;
  double y_left = 0.0, y_right = 1.0;
  Potential1D potential;
  BoundarySpec1D bc;
  double t_final = 0.0;
  int default_n = 100;
  double eta = 0.0;
  std::vector<double> output_times;
  Builder initial;
  Builder equilibrium;  // unperturbed state on the same grid; empty when not meaningful

  Grid1D grid(int n) const { return {y_left, y_right, n}; }
};

struct ProblemSpec2D {
  using Builder = std::function<ConservedState2D(const Grid2D&, const GasParams&)>;

  std::string name;
  double x_left = 0.0, x_right = 1.0, y_left = 0.0, y_right = 1.0;
  Potential2D potential;
  BoundarySpec2D bc;
  double t_final = 0.0;
  int default_nx = 100, default_ny = 100;
  double eta = 0.0;
  std::vector<double> output_times;
  Builder initial;
  Builder equilibrium;

  Grid2D grid(int nx, int ny) const { return {x_left, x_right, y_left, y_right, nx, ny}; }
};

using ProblemSpec = std::variant<ProblemSpec1D, ProblemSpec2D>;

enum class PotentialKind { linear, quadratic, sine };

Potential1D make_potential_1d(PotentialKind kind);

/// phi = y on [0,1]; (rho, v, p) = (1, 0, 1) for y <= 0.5, else (0.125, 0, 0.1);
/// reflecting ends; T = 0.2.
ProblemSpec1D sod_tube();

/// Discrete steady state rho_k = exp(-phi(y_k)), L == 1, plus the pressure
/// bump eta * exp(-width (y - center)^2); hydrostatic boundaries; T = 0.25.
ProblemSpec1D isothermal_1d(PotentialKind kind, double eta, double center = 0.5, double width = 100.0);

/// phi = x + y on [0,1]^2; discrete steady state with L_j = exp(-1.21 x_j)
/// and K_k = exp(-1.21 (x_right + y_k)), plus the bump
/// eta * exp(-121 ((x-0.3)^2 + (y-0.3)^2)); T = 0.15.
ProblemSpec2D isothermal_2d(double eta);

/// phi = 0.118 y on [0,3]^2; rho = 1, p = 1 - phi + 0.005 inside the disk
/// (x-1.5)^2 + (y-1.5)^2 < 0.01; T = 2.4 with snapshots at 1.2 and 1.8.
ProblemSpec2D explosion_2d();

/// Names: sod, isothermal-linear, isothermal-quadratic, isothermal-sine,
/// isothermal-2d, explosion. `eta` overrides the default perturbation.
ProblemSpec make_problem(const std::string& name, std::optional<double> eta = std::nullopt);

std::vector<std::string> problem_names();

/// Interior cell pressures.
std::vector<double> pressure_1d(const ConservedState1D& q, const PotentialField1D& phi, const GasParams& gas);
Field2D pressure_2d(const ConservedState2D& q, const PotentialField2D& phi, const GasParams& gas);

}  // namespace wbcu
