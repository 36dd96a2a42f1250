// Generalized minmod limiting and the piecewise-linear reconstructions.
//
// The well-balanced path reconstructs rho and the momenta conservatively but
// recovers interface pressures from the equilibrium variables K (x) and L (y):
// p = K - Q or p = L - R at the face. The baseline path recovers p from the
// reconstructed augmented energy instead.
#pragma once

#include <initializer_list>
#include <span>

#include "wbcu/core.hpp"
#include "wbcu/gravity.hpp"

namespace wbcu {

enum class Scheme { well_balanced, baseline };

inline constexpr double kDefaultTheta = 1.3;

double minmod(std::span<const double> values);
double minmod(std::initializer_list<double> values);
double minmod(double a, double b);

/// minmod(theta*(q+ - q)/h, (q+ - q-)/(2h), theta*(q - q-)/h)
double limited_slope(double q_minus, double q_center, double q_plus, double h, double theta);

/// Limited slopes of every cell. A ghost slope is limited against a second
/// ghost value extrapolated quadratically from the edge; the corner ghosts of
/// 2-D fields keep zero slope.
Field1D limited_slopes(const Field1D& avg, double h, double theta);
Field2D limited_slopes_x(const Field2D& avg, double h, double theta);
Field2D limited_slopes_y(const Field2D& avg, double h, double theta);

/// Point values on one side of every cell. `eq` holds the equilibrium variable
/// that feeds the momentum flux normal to the face (L in 1-D; K on east/west
/// faces, L on north/south faces in 2-D).
struct Faces1D {
  Field1D rho, mom, etot, v, p, E, rhophi, eq;
  explicit Faces1D(int n = 0) : rho(n), mom(n), etot(n), v(n), p(n), E(n), rhophi(n), eq(n) {}
};

/// North values are meaningful for k = -1..n-1, south values for k = 0..n.
struct InterfaceValues1D {
  Faces1D north, south;
  explicit InterfaceValues1D(int n = 0) : north(n), south(n) {}
};

struct Faces2D {
  Field2D rho, mu, mv, etot, u, v, p, E, rhophi, eq;
  Faces2D() = default;
  Faces2D(int nx, int ny)
      : rho(nx, ny), mu(nx, ny), mv(nx, ny), etot(nx, ny), u(nx, ny), v(nx, ny), p(nx, ny), E(nx, ny), rhophi(nx, ny),
        eq(nx, ny) {}
};

/// East values are meaningful for j = -1..nx-1, west for j = 0..nx (interior
/// rows); north for k = -1..ny-1, south for k = 0..ny (interior columns).
struct InterfaceValues2D {
  Faces2D east, west, north, south;
  InterfaceValues2D() = default;
  InterfaceValues2D(int nx, int ny) : east(nx, ny), west(nx, ny), north(nx, ny), south(nx, ny) {}
};

/// Fills rho, mom, etot and v on both sides of every cell, ghosts included.
InterfaceValues1D reconstruct_conservative_1d(const ConservedState1D& state, const Grid1D& grid, double theta);

struct EquilibriumFaces1D {
  Field1D L_north, L_south, p_north, p_south;
};

/// Reconstructs L from eq.L_center (ghosts included) and recovers face
/// pressures p_N = L_N - R_{k+1/2}, p_S = L_S - R_{k-1/2}.
EquilibriumFaces1D reconstruct_equilibrium_1d(const EquilibriumField1D& eq, const Grid1D& grid, double theta);

/// Full interface reconstruction for the chosen scheme. Throws StateError
/// naming the cell and face when a recovered density or pressure is not
/// positive.
InterfaceValues1D reconstruct_1d(const ConservedState1D& state, const EquilibriumField1D& eq,
                                 const PotentialField1D& phi, const Grid1D& grid, const GasParams& gas, double theta,
                                 Scheme scheme);

InterfaceValues2D reconstruct_2d(const ConservedState2D& state, const EquilibriumField2D& eq,
                                 const PotentialField2D& phi, const Grid2D& grid, const GasParams& gas, double theta,
                                 Scheme scheme);

}  // namespace wbcu
