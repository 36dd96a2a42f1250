// Grids, cell-centred fields, conserved states and the ideal-gas relations
// shared by every other part of the solver.
//
// Index convention: interior cells are k = 0..n-1 (and j = 0..nx-1 in x).
// One ghost layer sits at k = -1 and k = n. Interfaces are addressed by the
// index of the cell on their upper side, so interface k is y_{k-1/2} and the
// interfaces of a 1-D grid run 0..n.
#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wbcu {

// ---------------------------------------------------------------------------
// Errors

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Non-physical reconstructed or evolved state (negative density/pressure).
struct StateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Failure while building a discrete steady state.
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Grids

struct Grid1D {
  static constexpr int ghost_layers = 1;

  double y_left = 0.0;
  double y_right = 1.0;
  int n_cells = 0;
  double dy = 0.0;

  Grid1D() = default;
  Grid1D(double left, double right, int n);

  double center(int k) const { return y_left + (k + 0.5) * dy; }
  /// y_{k-1/2}; iface(0) == y_left, iface(n) == y_right.
  double iface(int k) const;
  double length() const { return y_right - y_left; }
};

struct Grid2D {
  static constexpr int ghost_layers = 1;

  double x_left = 0.0, x_right = 1.0;
  double y_left = 0.0, y_right = 1.0;
  int nx = 0, ny = 0;
  double dx = 0.0, dy = 0.0;

  Grid2D() = default;
  Grid2D(double xl, double xr, double yl, double yr, int nx, int ny);

  double xc(int j) const { return x_left + (j + 0.5) * dx; }
  double yc(int k) const { return y_left + (k + 0.5) * dy; }
  double xface(int j) const;  // x_{j-1/2}
  double yface(int k) const;  // y_{k-1/2}
  double x_length() const { return x_right - x_left; }
  double y_length() const { return y_right - y_left; }
  Grid1D x_grid() const { return {x_left, x_right, nx}; }
  Grid1D y_grid() const { return {y_left, y_right, ny}; }
};

// ---------------------------------------------------------------------------
// Fields

/// Cell-centred values on a 1-D grid including one ghost cell per side.
class Field1D {
 public:
  Field1D() = default;
  explicit Field1D(int n, double value = 0.0) : n_(n), data_(static_cast<std::size_t>(n) + 2, value) {}

  int n() const { return n_; }
  double& operator()(int k) { return data_[static_cast<std::size_t>(k + 1)]; }
  double operator()(int k) const { return data_[static_cast<std::size_t>(k + 1)]; }

  std::span<double> raw() { return data_; }
  std::span<const double> raw() const { return data_; }
  std::vector<double> interior() const;

  Field1D& operator+=(const Field1D& o);
  Field1D& operator-=(const Field1D& o);
  Field1D& operator*=(double s);

 private:
  int n_ = 0;
  std::vector<double> data_;
};

/// Cell-centred values on a 2-D grid with one ghost ring, stored (j,k)
/// row-major with k contiguous. Corner ghosts exist but are never read.
class Field2D {
 public:
  Field2D() = default;
  Field2D(int nx, int ny, double value = 0.0)
      : nx_(nx), ny_(ny), data_(static_cast<std::size_t>(nx + 2) * static_cast<std::size_t>(ny + 2), value) {}

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double& operator()(int j, int k) { return data_[offset(j, k)]; }
  double operator()(int j, int k) const { return data_[offset(j, k)]; }

  std::span<double> raw() { return data_; }
  std::span<const double> raw() const { return data_; }

  Field2D& operator+=(const Field2D& o);
  Field2D& operator-=(const Field2D& o);
  Field2D& operator*=(double s);

 private:
  std::size_t offset(int j, int k) const {
    return static_cast<std::size_t>(j + 1) * static_cast<std::size_t>(ny_ + 2) + static_cast<std::size_t>(k + 1);
  }
  int nx_ = 0, ny_ = 0;
  std::vector<double> data_;
};

/// Dense rows x cols array without ghosts, used for interface-located data.
template <class T>
class Array2D {
 public:
  Array2D() = default;
  Array2D(int rows, int cols, T value = T{})
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), value) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

// ---------------------------------------------------------------------------
// Conserved states. The last component is the gravitationally augmented
// energy E + rho*phi.

struct ConservedState1D {
  Field1D rho, mom_y, energy_tot;

  ConservedState1D() = default;
  explicit ConservedState1D(int n) : rho(n), mom_y(n), energy_tot(n) {}
  int n() const { return rho.n(); }

  ConservedState1D& operator+=(const ConservedState1D& o);
  ConservedState1D& operator*=(double s);
  friend ConservedState1D operator+(ConservedState1D a, const ConservedState1D& b) { return a += b; }
  friend ConservedState1D operator*(double s, ConservedState1D a) { return a *= s; }
  friend ConservedState1D operator*(ConservedState1D a, double s) { return a *= s; }
};

struct ConservedState2D {
  Field2D rho, mom_x, mom_y, energy_tot;

  ConservedState2D() = default;
  ConservedState2D(int nx, int ny) : rho(nx, ny), mom_x(nx, ny), mom_y(nx, ny), energy_tot(nx, ny) {}
  int nx() const { return rho.nx(); }
  int ny() const { return rho.ny(); }

  ConservedState2D& operator+=(const ConservedState2D& o);
  ConservedState2D& operator*=(double s);
  friend ConservedState2D operator+(ConservedState2D a, const ConservedState2D& b) { return a += b; }
  friend ConservedState2D operator*(double s, ConservedState2D a) { return a *= s; }
  friend ConservedState2D operator*(ConservedState2D a, double s) { return a *= s; }
};

struct GasParams {
  double gamma = 1.4;
};

// ---------------------------------------------------------------------------
// Gravitational potential

struct Potential1D {
  std::function<double(double)> phi;
  std::function<double(double)> dphi;  // phi_y
};

struct Potential2D {
  std::function<double(double, double)> phi;
  std::function<double(double, double)> phi_x;
  std::function<double(double, double)> phi_y;
};

/// phi sampled on a 1-D grid: centres (with ghosts), interfaces 0..n, and
/// phi_y at centres (with ghosts).
struct PotentialField1D {
  Field1D phi_center;
  std::vector<double> phi_iface;
  Field1D dphi_center;

  PotentialField1D() = default;
  PotentialField1D(const Potential1D& pot, const Grid1D& grid);
};

/// phi sampled on a 2-D grid. phi_xface(j,k) = phi(x_{j-1/2}, y_k) with
/// j = 0..nx; phi_yface(j,k) = phi(x_j, y_{k-1/2}) with k = 0..ny.
struct PotentialField2D {
  Field2D phi_center;
  Array2D<double> phi_xface;
  Array2D<double> phi_yface;
  Field2D dphix_center;
  Field2D dphiy_center;

  PotentialField2D() = default;
  PotentialField2D(const Potential2D& pot, const Grid2D& grid);
};

// ---------------------------------------------------------------------------
// Ideal-gas relations

/// (gamma-1)(E - |mom|^2/(2 rho)).
double pressure_from_conserved(double rho, double mom, double E, const GasParams& gas);
double pressure_from_conserved(double rho, double mom_x, double mom_y, double E, const GasParams& gas);

double energy_from_pressure(double rho, double mom, double p, const GasParams& gas);
double energy_from_pressure(double rho, double mom_x, double mom_y, double p, const GasParams& gas);

double sound_speed(double rho, double p, const GasParams& gas);

/// energy_tot[k] = E[k] + rho[k] * phi_center[k] over all cells including ghosts.
Field1D augment_energy(const Field1D& E, const Field1D& rho, const PotentialField1D& phi);
Field1D deaugment_energy(const Field1D& energy_tot, const Field1D& rho, const PotentialField1D& phi);
Field2D augment_energy(const Field2D& E, const Field2D& rho, const PotentialField2D& phi);
Field2D deaugment_energy(const Field2D& energy_tot, const Field2D& rho, const PotentialField2D& phi);

/// Primitive-variable view of one cell, used by builders and output.
struct Primitive1D {
  double rho, v, p;
};
struct Primitive2D {
  double rho, u, v, p;
};

Primitive1D primitive_at(const ConservedState1D& q, const PotentialField1D& phi, const GasParams& gas, int k);
Primitive2D primitive_at(const ConservedState2D& q, const PotentialField2D& phi, const GasParams& gas, int j, int k);

}  // namespace wbcu
