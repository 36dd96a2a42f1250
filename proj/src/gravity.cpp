#include "wbcu/gravity.hpp"

#include <sstream>

namespace wbcu {

EquilibriumField1D compute_R_1d(const Field1D& rho_avg, const PotentialField1D& phi, const Grid1D& grid) {
  const int n = grid.n_cells;
  EquilibriumField1D eq{std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0), Field1D(n), Field1D(n)};
  for (int k = 0; k < n; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    eq.R_iface[kk + 1] = eq.R_iface[kk] + grid.dy * rho_avg(k) * phi.dphi_center(k);
    eq.R_center(k) = 0.5 * (eq.R_iface[kk] + eq.R_iface[kk + 1]);
  }
  return eq;
}

EquilibriumField2D compute_QR_2d(const Field2D& rho_avg, const PotentialField2D& phi, const Grid2D& g) {
  EquilibriumField2D eq{Array2D<double>(g.nx + 1, g.ny, 0.0), Field2D(g.nx, g.ny), Array2D<double>(g.nx, g.ny + 1, 0.0),
                        Field2D(g.nx, g.ny),          Field2D(g.nx, g.ny), Field2D(g.nx, g.ny)};
  for (int k = 0; k < g.ny; ++k) {
    for (int j = 0; j < g.nx; ++j) {
      eq.Q_iface(j + 1, k) = eq.Q_iface(j, k) + g.dx * rho_avg(j, k) * phi.dphix_center(j, k);
      eq.Q_center(j, k) = 0.5 * (eq.Q_iface(j, k) + eq.Q_iface(j + 1, k));
    }
  }
  for (int j = 0; j < g.nx; ++j) {
    for (int k = 0; k < g.ny; ++k) {
      eq.R_iface(j, k + 1) = eq.R_iface(j, k) + g.dy * rho_avg(j, k) * phi.dphiy_center(j, k);
      eq.R_center(j, k) = 0.5 * (eq.R_iface(j, k) + eq.R_iface(j, k + 1));
    }
  }
  return eq;
}

double quadratic_R_linear_potential(std::span<const double> rho_avg, std::span<const double> rho_slopes, double g,
                                    const Grid1D& grid, double y) {
  const int n = grid.n_cells;
  if (rho_avg.size() != static_cast<std::size_t>(n) || rho_slopes.size() != static_cast<std::size_t>(n))
    throw UsageError("density and slope arrays must cover the interior cells");
  if (y < grid.y_left || y > grid.y_right) throw DomainError("evaluation point lies outside the domain");

  // Same accumulation order as compute_R_1d so interface values agree bit for bit.
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    const double lo = grid.iface(k);
    const double hi = grid.iface(k + 1);
    if (y < hi) {
      const double s = y - lo;
      return acc + g * (rho_avg[kk] * s + 0.5 * rho_slopes[kk] * s * (y - hi));
    }
    acc = acc + grid.dy * rho_avg[kk] * g;
  }
  return acc;
}

ConservedState1D steady_state_1d(std::span<const double> rho_samples, double L_const, const PotentialField1D& phi,
                                 const Grid1D& grid, const GasParams& gas) {
  const int n = grid.n_cells;
  if (rho_samples.size() != static_cast<std::size_t>(n)) throw UsageError("need one density sample per cell");
  ConservedState1D q(n);
  for (int k = 0; k < n; ++k) {
    const double r = rho_samples[static_cast<std::size_t>(k)];
    if (!(r > 0.0)) {
      std::ostringstream os;
      os << "non-positive density sample " << r << " in cell " << k;
      throw ConstructionError(os.str());
    }
    q.rho(k) = r;
  }
  const EquilibriumField1D eq = compute_R_1d(q.rho, phi, grid);
  for (int k = 0; k < n; ++k) {
    const double p = L_const - eq.R_center(k);
    if (!(p > 0.0)) {
      std::ostringstream os;
      os << "steady state has non-positive pressure " << p << " in cell " << k;
      throw ConstructionError(os.str());
    }
    q.mom_y(k) = 0.0;
    q.energy_tot(k) = p / (gas.gamma - 1.0) + q.rho(k) * phi.phi_center(k);
  }
  return q;
}

ConservedState2D steady_state_2d(std::span<const double> L_profile, std::span<const double> K_profile,
                                 const PotentialField2D& phi, const Grid2D& g, const GasParams& gas) {
  if (L_profile.size() != static_cast<std::size_t>(g.nx) || K_profile.size() != static_cast<std::size_t>(g.ny))
    throw UsageError("L profile needs nx entries and K profile ny entries");
  ConservedState2D q(g.nx, g.ny);
  // Q at the right face of the current cell, per row; R at the bottom face of
  // the current cell, per column.
  std::vector<double> Q_right(static_cast<std::size_t>(g.ny), 0.0);
  for (int j = g.nx - 1; j >= 0; --j) {
    double R_below = 0.0;
    for (int k = 0; k < g.ny; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      const double px = phi.dphix_center(j, k);
      const double py = phi.dphiy_center(j, k);
      const double den = 0.5 * g.dx * px + 0.5 * g.dy * py;
      auto fail = [&](const char* what, double value) {
        std::ostringstream os;
        os << what << " " << value << " at cell (" << j << "," << k << ")";
        throw ConstructionError(os.str());
      };
      if (den == 0.0) fail("degenerate potential: dx*phi_x + dy*phi_y vanishes, value", den);
      const double L = L_profile[static_cast<std::size_t>(j)];
      const double K = K_profile[kk];
      const double rho = (L - K - R_below + Q_right[kk]) / den;
      if (!(rho > 0.0)) fail("steady state has non-positive density", rho);
      const double p = 0.5 * (L + K - R_below - Q_right[kk] + (0.5 * g.dx * px - 0.5 * g.dy * py) * rho);
      if (!(p > 0.0)) fail("steady state has non-positive pressure", p);
      q.rho(j, k) = rho;
      q.mom_x(j, k) = 0.0;
      q.mom_y(j, k) = 0.0;
      q.energy_tot(j, k) = p / (gas.gamma - 1.0) + rho * phi.phi_center(j, k);
      Q_right[kk] = Q_right[kk] - g.dx * rho * px;
      R_below = R_below + g.dy * rho * py;
    }
  }
  return q;
}

}  // namespace wbcu
