// Shared fixtures for the unit tests.
#pragma once

#include <cmath>
#include <vector>

#include <doctest.h>

#include "wbcu/evolution.hpp"

namespace wbcu::test {

inline const GasParams kGas{1.4};

inline Potential1D zero_potential_1d() {
  return {[](double) { return 0.0; }, [](double) { return 0.0; }};
}

inline Potential1D linear_potential_1d(double g = 1.0) {
  return {[g](double y) { return g * y; }, [g](double) { return g; }};
}

inline Potential2D zero_potential_2d() {
  return {[](double, double) { return 0.0; }, [](double, double) { return 0.0; },
          [](double, double) { return 0.0; }};
}

/// Uniform primitive state (rho, v, p) in every cell, ghosts included.
inline ConservedState1D uniform_state_1d(int n, double rho, double v, double p, const PotentialField1D& phi) {
  ConservedState1D q(n);
  for (int k = -1; k <= n; ++k) {
    q.rho(k) = rho;
    q.mom_y(k) = rho * v;
    q.energy_tot(k) = energy_from_pressure(rho, rho * v, p, kGas) + rho * phi.phi_center(k);
  }
  return q;
}

inline ConservedState2D uniform_state_2d(int nx, int ny, double rho, double u, double v, double p,
                                         const PotentialField2D& phi) {
  ConservedState2D q(nx, ny);
  for (int j = -1; j <= nx; ++j)
    for (int k = -1; k <= ny; ++k) {
      q.rho(j, k) = rho;
      q.mom_x(j, k) = rho * u;
      q.mom_y(j, k) = rho * v;
      q.energy_tot(j, k) = energy_from_pressure(rho, rho * u, rho * v, p, kGas) + rho * phi.phi_center(j, k);
    }
  return q;
}

inline double max_abs(const Field1D& f) {
  double m = 0.0;
  for (int k = 0; k < f.n(); ++k) m = std::max(m, std::abs(f(k)));
  return m;
}

inline double max_abs(const Field2D& f) {
  double m = 0.0;
  for (int j = 0; j < f.nx(); ++j)
    for (int k = 0; k < f.ny(); ++k) m = std::max(m, std::abs(f(j, k)));
  return m;
}

inline double max_abs(const ConservedState1D& q) {
  return std::max({max_abs(q.rho), max_abs(q.mom_y), max_abs(q.energy_tot)});
}

inline double max_abs(const ConservedState2D& q) {
  return std::max({max_abs(q.rho), max_abs(q.mom_x), max_abs(q.mom_y), max_abs(q.energy_tot)});
}

}  // namespace wbcu::test
