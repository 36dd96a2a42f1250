#include "wbcu/reconstruction.hpp"

#include <algorithm>
#include <sstream>

namespace wbcu {

namespace {

[[noreturn]] void bad_face(const char* what, double value, const char* face, int j, int k, bool two_d) {
  std::ostringstream os;
  os << "non-positive reconstructed " << what << " " << value << " on the " << face << " face of cell ";
  if (two_d)
    os << "(" << j << "," << k << ")";
  else
    os << k;
  throw StateError(os.str());
}

void check_face_1d(const Faces1D& f, int k, const char* face) {
  if (!(f.rho(k) > 0.0)) bad_face("density", f.rho(k), face, 0, k, false);
  if (!(f.p(k) > 0.0)) bad_face("pressure", f.p(k), face, 0, k, false);
}

void check_face_2d(const Faces2D& f, int j, int k, const char* face) {
  if (!(f.rho(j, k) > 0.0)) bad_face("density", f.rho(j, k), face, j, k, true);
  if (!(f.p(j, k) > 0.0)) bad_face("pressure", f.p(j, k), face, j, k, true);
}

// Face values from the conservative path: E from the augmented energy.
void finish_baseline_1d(Faces1D& f, int k, double phi_face, double R_face, const GasParams& gas) {
  f.rhophi(k) = f.rho(k) * phi_face;
  f.E(k) = f.etot(k) - f.rhophi(k);
  f.p(k) = (gas.gamma - 1.0) * (f.E(k) - 0.5 * f.rho(k) * f.v(k) * f.v(k));
  f.eq(k) = f.p(k) + R_face;
}

void finish_wb_1d(Faces1D& f, int k, double L_face, double phi_face, double R_face, const GasParams& gas) {
  f.rhophi(k) = f.rho(k) * phi_face;
  f.eq(k) = L_face;
  f.p(k) = L_face - R_face;
  f.E(k) = f.p(k) / (gas.gamma - 1.0) + 0.5 * f.rho(k) * f.v(k) * f.v(k);
}

void finish_baseline_2d(Faces2D& f, int j, int k, double phi_face, double global_face, const GasParams& gas) {
  const double rho = f.rho(j, k), u = f.u(j, k), v = f.v(j, k);
  f.rhophi(j, k) = rho * phi_face;
  f.E(j, k) = f.etot(j, k) - f.rhophi(j, k);
  f.p(j, k) = (gas.gamma - 1.0) * (f.E(j, k) - 0.5 * rho * (u * u + v * v));
  f.eq(j, k) = f.p(j, k) + global_face;
}

void finish_wb_2d(Faces2D& f, int j, int k, double eq_face, double phi_face, double global_face,
                  const GasParams& gas) {
  const double rho = f.rho(j, k), u = f.u(j, k), v = f.v(j, k);
  f.rhophi(j, k) = rho * phi_face;
  f.eq(j, k) = eq_face;
  f.p(j, k) = eq_face - global_face;
  f.E(j, k) = f.p(j, k) / (gas.gamma - 1.0) + 0.5 * rho * (u * u + v * v);
}

}  // namespace

double minmod(std::span<const double> values) {
  if (values.empty()) throw UsageError("minmod needs at least one argument");
  const bool all_pos = std::all_of(values.begin(), values.end(), [](double x) { return x > 0.0; });
  const bool all_neg = std::all_of(values.begin(), values.end(), [](double x) { return x < 0.0; });
  if (all_pos) return *std::min_element(values.begin(), values.end());
  if (all_neg) return *std::max_element(values.begin(), values.end());
  return 0.0;
}

double minmod(std::initializer_list<double> values) { return minmod(std::span<const double>(values.begin(), values.size())); }

double minmod(double a, double b) {
  if (a > 0.0 && b > 0.0) return std::min(a, b);
  if (a < 0.0 && b < 0.0) return std::max(a, b);
  return 0.0;
}

double limited_slope(double q_minus, double q_center, double q_plus, double h, double theta) {
  const double fwd = theta * (q_plus - q_center) / h;
  const double ctr = (q_plus - q_minus) / (2.0 * h);
  const double bwd = theta * (q_center - q_minus) / h;
  if (fwd > 0.0 && ctr > 0.0 && bwd > 0.0) return std::min({fwd, ctr, bwd});
  if (fwd < 0.0 && ctr < 0.0 && bwd < 0.0) return std::max({fwd, ctr, bwd});
  return 0.0;
}

namespace {

// Ghost slope from the ghost, its interior neighbour and a second ghost value
// extrapolated quadratically from the three values nearest the edge.
double ghost_slope(double ghost, double inner, double next, double h, double theta) {
  return limited_slope(3.0 * ghost - 3.0 * inner + next, ghost, inner, h, theta);
}

}  // namespace

Field1D limited_slopes(const Field1D& avg, double h, double theta) {
  const int n = avg.n();
  Field1D s(n);
  for (int k = 0; k < n; ++k) s(k) = limited_slope(avg(k - 1), avg(k), avg(k + 1), h, theta);
  s(-1) = ghost_slope(avg(-1), avg(0), avg(1), h, theta);
  s(n) = -ghost_slope(avg(n), avg(n - 1), avg(n - 2), h, theta);
  return s;
}

Field2D limited_slopes_x(const Field2D& avg, double h, double theta) {
  const int nx = avg.nx();
  Field2D s(nx, avg.ny());
  for (int k = 0; k < avg.ny(); ++k) {
    for (int j = 0; j < nx; ++j) s(j, k) = limited_slope(avg(j - 1, k), avg(j, k), avg(j + 1, k), h, theta);
    s(-1, k) = ghost_slope(avg(-1, k), avg(0, k), avg(1, k), h, theta);
    s(nx, k) = -ghost_slope(avg(nx, k), avg(nx - 1, k), avg(nx - 2, k), h, theta);
  }
  return s;
}

Field2D limited_slopes_y(const Field2D& avg, double h, double theta) {
  const int ny = avg.ny();
  Field2D s(avg.nx(), ny);
  for (int j = 0; j < avg.nx(); ++j) {
    for (int k = 0; k < ny; ++k) s(j, k) = limited_slope(avg(j, k - 1), avg(j, k), avg(j, k + 1), h, theta);
    s(j, -1) = ghost_slope(avg(j, -1), avg(j, 0), avg(j, 1), h, theta);
    s(j, ny) = -ghost_slope(avg(j, ny), avg(j, ny - 1), avg(j, ny - 2), h, theta);
  }
  return s;
}

InterfaceValues1D reconstruct_conservative_1d(const ConservedState1D& state, const Grid1D& grid, double theta) {
  const int n = grid.n_cells;
  InterfaceValues1D iv(n);
  const double half = 0.5 * grid.dy;
  auto side = [&](const Field1D& avg, Field1D& north, Field1D& south) {
    const Field1D s = limited_slopes(avg, grid.dy, theta);
    for (int k = -1; k <= n; ++k) {
      north(k) = avg(k) + half * s(k);
      south(k) = avg(k) - half * s(k);
    }
  };
  side(state.rho, iv.north.rho, iv.south.rho);
  side(state.mom_y, iv.north.mom, iv.south.mom);
  side(state.energy_tot, iv.north.etot, iv.south.etot);
  for (int k = -1; k <= n; ++k) {
    iv.north.v(k) = iv.north.mom(k) / iv.north.rho(k);
    iv.south.v(k) = iv.south.mom(k) / iv.south.rho(k);
  }
  return iv;
}

EquilibriumFaces1D reconstruct_equilibrium_1d(const EquilibriumField1D& eq, const Grid1D& grid, double theta) {
  const int n = grid.n_cells;
  EquilibriumFaces1D out{Field1D(n), Field1D(n), Field1D(n), Field1D(n)};
  const Field1D s = limited_slopes(eq.L_center, grid.dy, theta);
  const double half = 0.5 * grid.dy;
  for (int k = -1; k <= n; ++k) {
    out.L_north(k) = eq.L_center(k) + half * s(k);
    out.L_south(k) = eq.L_center(k) - half * s(k);
  }
  for (int k = -1; k < n; ++k) out.p_north(k) = out.L_north(k) - eq.R_iface[static_cast<std::size_t>(k + 1)];
  for (int k = 0; k <= n; ++k) out.p_south(k) = out.L_south(k) - eq.R_iface[static_cast<std::size_t>(k)];
  return out;
}

InterfaceValues1D reconstruct_1d(const ConservedState1D& state, const EquilibriumField1D& eq,
                                 const PotentialField1D& phi, const Grid1D& grid, const GasParams& gas, double theta,
                                 Scheme scheme) {
  const int n = grid.n_cells;
  InterfaceValues1D iv = reconstruct_conservative_1d(state, grid, theta);
  for (int k = -1; k <= n; ++k) {
    if (!(iv.north.rho(k) > 0.0) && k < n) bad_face("density", iv.north.rho(k), "north", 0, k, false);
    if (!(iv.south.rho(k) > 0.0) && k > -1) bad_face("density", iv.south.rho(k), "south", 0, k, false);
  }
  if (scheme == Scheme::well_balanced) {
    const EquilibriumFaces1D ef = reconstruct_equilibrium_1d(eq, grid, theta);
    for (int k = -1; k < n; ++k) {
      const auto up = static_cast<std::size_t>(k + 1);
      finish_wb_1d(iv.north, k, ef.L_north(k), phi.phi_iface[up], eq.R_iface[up], gas);
      check_face_1d(iv.north, k, "north");
    }
    for (int k = 0; k <= n; ++k) {
      const auto lo = static_cast<std::size_t>(k);
      finish_wb_1d(iv.south, k, ef.L_south(k), phi.phi_iface[lo], eq.R_iface[lo], gas);
      check_face_1d(iv.south, k, "south");
    }
  } else {
    for (int k = -1; k < n; ++k) {
      const auto up = static_cast<std::size_t>(k + 1);
      finish_baseline_1d(iv.north, k, phi.phi_iface[up], eq.R_iface[up], gas);
      check_face_1d(iv.north, k, "north");
    }
    for (int k = 0; k <= n; ++k) {
      const auto lo = static_cast<std::size_t>(k);
      finish_baseline_1d(iv.south, k, phi.phi_iface[lo], eq.R_iface[lo], gas);
      check_face_1d(iv.south, k, "south");
    }
  }
  return iv;
}

InterfaceValues2D reconstruct_2d(const ConservedState2D& state, const EquilibriumField2D& eq,
                                 const PotentialField2D& phi, const Grid2D& g, const GasParams& gas, double theta,
                                 Scheme scheme) {
  const int nx = g.nx, ny = g.ny;
  InterfaceValues2D iv(nx, ny);
  const double hx = 0.5 * g.dx, hy = 0.5 * g.dy;

  auto both = [&](const Field2D& avg, Field2D Faces2D::*member) {
    const Field2D sx = limited_slopes_x(avg, g.dx, theta);
    const Field2D sy = limited_slopes_y(avg, g.dy, theta);
    for (int j = -1; j <= nx; ++j) {
      for (int k = -1; k <= ny; ++k) {
        (iv.east.*member)(j, k) = avg(j, k) + hx * sx(j, k);
        (iv.west.*member)(j, k) = avg(j, k) - hx * sx(j, k);
        (iv.north.*member)(j, k) = avg(j, k) + hy * sy(j, k);
        (iv.south.*member)(j, k) = avg(j, k) - hy * sy(j, k);
      }
    }
  };
  both(state.rho, &Faces2D::rho);
  both(state.mom_x, &Faces2D::mu);
  both(state.mom_y, &Faces2D::mv);
  both(state.energy_tot, &Faces2D::etot);

  // Velocities on the faces that take part in a flux.
  auto velocities = [](Faces2D& f, int j, int k, const char* face) {
    if (!(f.rho(j, k) > 0.0)) bad_face("density", f.rho(j, k), face, j, k, true);
    f.u(j, k) = f.mu(j, k) / f.rho(j, k);
    f.v(j, k) = f.mv(j, k) / f.rho(j, k);
  };
  for (int k = 0; k < ny; ++k) {
    for (int j = -1; j < nx; ++j) velocities(iv.east, j, k, "east");
    for (int j = 0; j <= nx; ++j) velocities(iv.west, j, k, "west");
  }
  for (int j = 0; j < nx; ++j) {
    for (int k = -1; k < ny; ++k) velocities(iv.north, j, k, "north");
    for (int k = 0; k <= ny; ++k) velocities(iv.south, j, k, "south");
  }

  if (scheme == Scheme::well_balanced) {
    // One-dimensional reconstructions: K along x, L along y.
    const Field2D sK = limited_slopes_x(eq.K_center, g.dx, theta);
    const Field2D sL = limited_slopes_y(eq.L_center, g.dy, theta);
    for (int k = 0; k < ny; ++k) {
      for (int j = -1; j < nx; ++j) {
        finish_wb_2d(iv.east, j, k, eq.K_center(j, k) + hx * sK(j, k), phi.phi_xface(j + 1, k), eq.Q_iface(j + 1, k), gas);
        check_face_2d(iv.east, j, k, "east");
      }
      for (int j = 0; j <= nx; ++j) {
        finish_wb_2d(iv.west, j, k, eq.K_center(j, k) - hx * sK(j, k), phi.phi_xface(j, k), eq.Q_iface(j, k), gas);
        check_face_2d(iv.west, j, k, "west");
      }
    }
    for (int j = 0; j < nx; ++j) {
      for (int k = -1; k < ny; ++k) {
        finish_wb_2d(iv.north, j, k, eq.L_center(j, k) + hy * sL(j, k), phi.phi_yface(j, k + 1), eq.R_iface(j, k + 1), gas);
        check_face_2d(iv.north, j, k, "north");
      }
      for (int k = 0; k <= ny; ++k) {
        finish_wb_2d(iv.south, j, k, eq.L_center(j, k) - hy * sL(j, k), phi.phi_yface(j, k), eq.R_iface(j, k), gas);
        check_face_2d(iv.south, j, k, "south");
      }
    }
  } else {
    for (int k = 0; k < ny; ++k) {
      for (int j = -1; j < nx; ++j) {
        finish_baseline_2d(iv.east, j, k, phi.phi_xface(j + 1, k), eq.Q_iface(j + 1, k), gas);
        check_face_2d(iv.east, j, k, "east");
      }
      for (int j = 0; j <= nx; ++j) {
        finish_baseline_2d(iv.west, j, k, phi.phi_xface(j, k), eq.Q_iface(j, k), gas);
        check_face_2d(iv.west, j, k, "west");
      }
    }
    for (int j = 0; j < nx; ++j) {
      for (int k = -1; k < ny; ++k) {
        finish_baseline_2d(iv.north, j, k, phi.phi_yface(j, k + 1), eq.R_iface(j, k + 1), gas);
        check_face_2d(iv.north, j, k, "north");
      }
      for (int k = 0; k <= ny; ++k) {
        finish_baseline_2d(iv.south, j, k, phi.phi_yface(j, k), eq.R_iface(j, k), gas);
        check_face_2d(iv.south, j, k, "south");
      }
    }
  }
  return iv;
}

}  // namespace wbcu
