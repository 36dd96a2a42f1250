// Global variables Q, R (antiderivatives of the gravitational source), the
// equilibrium variables K = p + Q and L = p + R, and constructors for
// discrete motionless steady states.
#pragma once

#include <span>
#include <vector>

#include "wbcu/core.hpp"

namespace wbcu {

struct EquilibriumField1D {
  std::vector<double> R_iface;  // R at y_{k-1/2}, k = 0..n; R_iface[0] == 0
  Field1D R_center;             // interior: interface midpoints; ghosts: extended rule
  Field1D L_center;             // p + R; ghosts set by the boundary conditions
};

struct EquilibriumField2D {
  Array2D<double> Q_iface;  // (nx+1) x ny, Q at (x_{j-1/2}, y_k); Q_iface(0,k) == 0
  Field2D Q_center;
  Array2D<double> R_iface;  // nx x (ny+1), R at (x_j, y_{k-1/2}); R_iface(j,0) == 0
  Field2D R_center;
  Field2D K_center;         // p + Q; x-ghosts set by the boundary conditions
  Field2D L_center;         // p + R; y-ghosts set by the boundary conditions
};

/// Midpoint-rule recursion for R from the bottom boundary, plus centre values.
/// Only the interior of rho_avg is read.
EquilibriumField1D compute_R_1d(const Field1D& rho_avg, const PotentialField1D& phi, const Grid1D& grid);

/// Q per row from the left boundary and R per column from the bottom one.
EquilibriumField2D compute_QR_2d(const Field2D& rho_avg, const PotentialField2D& phi, const Grid2D& grid);

/// Piecewise-quadratic R obtained by integrating the piecewise-linear density
/// exactly for phi(y) = g*y. At interfaces this is bit-identical to
/// compute_R_1d with phi_y == g.
double quadratic_R_linear_potential(std::span<const double> rho_avg, std::span<const double> rho_slopes, double g,
                                    const Grid1D& grid, double y);

/// Motionless discrete steady state with L == L_const at every centre.
/// Ghost cells are left zero; the boundary conditions fill them.
ConservedState1D steady_state_1d(std::span<const double> rho_samples, double L_const, const PotentialField1D& phi,
                                 const Grid1D& grid, const GasParams& gas);

/// Motionless discrete steady state with L depending on j only and K on k
/// only, for potentials of the form phi(x + y). Q is normalised to zero on the
/// right boundary and R on the bottom one; the sweep runs right to left and
/// bottom to top.
ConservedState2D steady_state_2d(std::span<const double> L_profile, std::span<const double> K_profile,
                                 const PotentialField2D& phi, const Grid2D& grid, const GasParams& gas);

}  // namespace wbcu
