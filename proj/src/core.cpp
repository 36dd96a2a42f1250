#include "wbcu/core.hpp"

#include <cmath>
#include <sstream>

namespace wbcu {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0)) {
    std::ostringstream os;
    os << "non-positive " << what << " (" << value << ")";
    throw DomainError(os.str());
  }
}

template <class F>
void check_same_shape(const F& a, const F& b) {
  if (a.raw().size() != b.raw().size()) throw UsageError("field extents differ");
}

}  // namespace

Grid1D::Grid1D(double left, double right, int n) : y_left(left), y_right(right), n_cells(n), dy((right - left) / n) {
  if (n < 3) throw UsageError("a 1-D grid needs at least 3 cells");
  if (!(dy > 0.0)) throw UsageError("grid spacing must be positive");
}

double Grid1D::iface(int k) const {
  if (k == n_cells) return y_right;
  return y_left + k * dy;
}

Grid2D::Grid2D(double xl, double xr, double yl, double yr, int nx_, int ny_)
    : x_left(xl), x_right(xr), y_left(yl), y_right(yr), nx(nx_), ny(ny_), dx((xr - xl) / nx_), dy((yr - yl) / ny_) {
  if (nx < 3 || ny < 3) throw UsageError("a 2-D grid needs at least 3 cells per direction");
  if (!(dx > 0.0) || !(dy > 0.0)) throw UsageError("grid spacing must be positive");
}

double Grid2D::xface(int j) const { return j == nx ? x_right : x_left + j * dx; }
double Grid2D::yface(int k) const { return k == ny ? y_right : y_left + k * dy; }

std::vector<double> Field1D::interior() const { return {data_.begin() + 1, data_.end() - 1}; }

Field1D& Field1D::operator+=(const Field1D& o) {
  check_same_shape(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Field1D& Field1D::operator-=(const Field1D& o) {
  check_same_shape(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Field1D& Field1D::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

Field2D& Field2D::operator+=(const Field2D& o) {
  check_same_shape(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Field2D& Field2D::operator-=(const Field2D& o) {
  check_same_shape(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Field2D& Field2D::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

ConservedState1D& ConservedState1D::operator+=(const ConservedState1D& o) {
  rho += o.rho;
  mom_y += o.mom_y;
  energy_tot += o.energy_tot;
  return *this;
}

ConservedState1D& ConservedState1D::operator*=(double s) {
  rho *= s;
  mom_y *= s;
  energy_tot *= s;
  return *this;
}

ConservedState2D& ConservedState2D::operator+=(const ConservedState2D& o) {
  rho += o.rho;
  mom_x += o.mom_x;
  mom_y += o.mom_y;
  energy_tot += o.energy_tot;
  return *this;
}

ConservedState2D& ConservedState2D::operator*=(double s) {
  rho *= s;
  mom_x *= s;
  mom_y *= s;
  energy_tot *= s;
  return *this;
}

PotentialField1D::PotentialField1D(const Potential1D& pot, const Grid1D& grid)
    : phi_center(grid.n_cells), phi_iface(static_cast<std::size_t>(grid.n_cells) + 1), dphi_center(grid.n_cells) {
  for (int k = -1; k <= grid.n_cells; ++k) {
    phi_center(k) = pot.phi(grid.center(k));
    dphi_center(k) = pot.dphi(grid.center(k));
  }
  for (int k = 0; k <= grid.n_cells; ++k) phi_iface[static_cast<std::size_t>(k)] = pot.phi(grid.iface(k));
}

PotentialField2D::PotentialField2D(const Potential2D& pot, const Grid2D& g)
    : phi_center(g.nx, g.ny),
      phi_xface(g.nx + 1, g.ny),
      phi_yface(g.nx, g.ny + 1),
      dphix_center(g.nx, g.ny),
      dphiy_center(g.nx, g.ny) {
  for (int j = -1; j <= g.nx; ++j) {
    for (int k = -1; k <= g.ny; ++k) {
      phi_center(j, k) = pot.phi(g.xc(j), g.yc(k));
      dphix_center(j, k) = pot.phi_x(g.xc(j), g.yc(k));
      dphiy_center(j, k) = pot.phi_y(g.xc(j), g.yc(k));
    }
  }
  for (int j = 0; j <= g.nx; ++j)
    for (int k = 0; k < g.ny; ++k) phi_xface(j, k) = pot.phi(g.xface(j), g.yc(k));
  for (int j = 0; j < g.nx; ++j)
    for (int k = 0; k <= g.ny; ++k) phi_yface(j, k) = pot.phi(g.xc(j), g.yface(k));
}

double pressure_from_conserved(double rho, double mom, double E, const GasParams& gas) {
  require_positive(rho, "density");
  return (gas.gamma - 1.0) * (E - 0.5 * mom * mom / rho);
}

double pressure_from_conserved(double rho, double mom_x, double mom_y, double E, const GasParams& gas) {
  require_positive(rho, "density");
  return (gas.gamma - 1.0) * (E - 0.5 * (mom_x * mom_x + mom_y * mom_y) / rho);
}

double energy_from_pressure(double rho, double mom, double p, const GasParams& gas) {
  require_positive(rho, "density");
  require_positive(p, "pressure");
  return p / (gas.gamma - 1.0) + 0.5 * mom * mom / rho;
}

double energy_from_pressure(double rho, double mom_x, double mom_y, double p, const GasParams& gas) {
  require_positive(rho, "density");
  require_positive(p, "pressure");
  return p / (gas.gamma - 1.0) + 0.5 * (mom_x * mom_x + mom_y * mom_y) / rho;
}

double sound_speed(double rho, double p, const GasParams& gas) {
  require_positive(rho, "density");
  require_positive(p, "pressure");
  return std::sqrt(gas.gamma * p / rho);
}

Field1D augment_energy(const Field1D& E, const Field1D& rho, const PotentialField1D& phi) {
  Field1D out(E.n());
  for (int k = -1; k <= E.n(); ++k) out(k) = E(k) + rho(k) * phi.phi_center(k);
  return out;
}

Field1D deaugment_energy(const Field1D& energy_tot, const Field1D& rho, const PotentialField1D& phi) {
  Field1D out(energy_tot.n());
  for (int k = -1; k <= energy_tot.n(); ++k) out(k) = energy_tot(k) - rho(k) * phi.phi_center(k);
  return out;
}

Field2D augment_energy(const Field2D& E, const Field2D& rho, const PotentialField2D& phi) {
  Field2D out(E.nx(), E.ny());
  for (int j = -1; j <= E.nx(); ++j)
    for (int k = -1; k <= E.ny(); ++k) out(j, k) = E(j, k) + rho(j, k) * phi.phi_center(j, k);
  return out;
}

Field2D deaugment_energy(const Field2D& energy_tot, const Field2D& rho, const PotentialField2D& phi) {
  Field2D out(energy_tot.nx(), energy_tot.ny());
  for (int j = -1; j <= energy_tot.nx(); ++j)
    for (int k = -1; k <= energy_tot.ny(); ++k) out(j, k) = energy_tot(j, k) - rho(j, k) * phi.phi_center(j, k);
  return out;
}

Primitive1D primitive_at(const ConservedState1D& q, const PotentialField1D& phi, const GasParams& gas, int k) {
  const double rho = q.rho(k);
  if (!(rho > 0.0)) {
    std::ostringstream os;
    os << "non-positive density " << rho << " in cell " << k;
    throw DomainError(os.str());
  }
  const double E = q.energy_tot(k) - rho * phi.phi_center(k);
  return {rho, q.mom_y(k) / rho, pressure_from_conserved(rho, q.mom_y(k), E, gas)};
}

Primitive2D primitive_at(const ConservedState2D& q, const PotentialField2D& phi, const GasParams& gas, int j, int k) {
  const double rho = q.rho(j, k);
  if (!(rho > 0.0)) {
    std::ostringstream os;
    os << "non-positive density " << rho << " in cell (" << j << "," << k << ")";
    throw DomainError(os.str());
  }
  const double E = q.energy_tot(j, k) - rho * phi.phi_center(j, k);
  return {rho, q.mom_x(j, k) / rho, q.mom_y(j, k) / rho, pressure_from_conserved(rho, q.mom_x(j, k), q.mom_y(j, k), E, gas)};
}

}  // namespace wbcu
