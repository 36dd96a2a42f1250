#include "wbcu/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wbcu {

namespace {

// One side of a boundary seen along its normal. `side` is -1 for the
// lower/left edge and +1 for the upper/right edge.
struct EdgeCell {
  double rho, vn, vt, p, eq;
};

struct EdgeContext {
  int side;
  double h;            // cell size normal to the edge
  double phi_jump;     // phi(ghost centre) - phi(boundary cell centre)
  double dphi_ghost;   // normal derivative of phi at the ghost cell
  double global_face;  // Q or R on the boundary face
};

/// Returns the ghost cell and the extended global variable at its centre.
std::pair<EdgeCell, double> ghost_cell(BoundaryKind kind, const EdgeCell& in, const EdgeContext& c) {
  EdgeCell g = in;
  switch (kind) {
    case BoundaryKind::reflecting:
      g.vn = -in.vn;
      break;
    case BoundaryKind::zero_order:
      break;
    case BoundaryKind::hydrostatic_zero_order:
      g.rho = in.rho * std::exp(-c.phi_jump);
      break;
  }
  const double global_center = c.global_face + c.side * 0.5 * c.h * g.rho * c.dphi_ghost;
  if (kind == BoundaryKind::zero_order) g.eq = g.p + global_center;
  if (kind == BoundaryKind::hydrostatic_zero_order) g.p = g.eq - global_center;
  return {g, global_center};
}

[[noreturn]] void bad_center(const char* what, double value, const std::string& where) {
  std::ostringstream os;
  os << "non-positive " << what << " " << value << " in cell " << where;
  throw StateError(os.str());
}

// Reflecting edges: the ghost face is the mirror image of the boundary cell's
// face, so the normal mass flux through the wall vanishes.
void mirror_face_1d(Faces1D& ghost, int g, const Faces1D& inner, int i) {
  for (auto m : {&Faces1D::rho, &Faces1D::etot, &Faces1D::p, &Faces1D::E, &Faces1D::rhophi, &Faces1D::eq})
    (ghost.*m)(g) = (inner.*m)(i);
  ghost.mom(g) = -inner.mom(i);
  ghost.v(g) = -inner.v(i);
}

void mirror_face_2d(Faces2D& ghost, int gj, int gk, const Faces2D& inner, int ij, int ik, bool normal_x) {
  for (auto m : {&Faces2D::rho, &Faces2D::mu, &Faces2D::mv, &Faces2D::etot, &Faces2D::u, &Faces2D::v, &Faces2D::p,
                 &Faces2D::E, &Faces2D::rhophi, &Faces2D::eq})
    (ghost.*m)(gj, gk) = (inner.*m)(ij, ik);
  Field2D& mn = normal_x ? ghost.mu : ghost.mv;
  Field2D& vn = normal_x ? ghost.u : ghost.v;
  mn(gj, gk) = -mn(gj, gk);
  vn(gj, gk) = -vn(gj, gk);
}

}  // namespace

void fill_ghosts_1d(ConservedState1D& q, EquilibriumField1D& eq, const BoundarySpec1D& spec,
                    const PotentialField1D& phi, const Grid1D& grid, const GasParams& gas) {
  const int n = grid.n_cells;
  auto apply = [&](BoundaryKind kind, int inner, int ghost, int side, double face_R) {
    const Primitive1D w = primitive_at(q, phi, gas, inner);
    const EdgeCell in{w.rho, w.v, 0.0, w.p, eq.L_center(inner)};
    const auto [g, R_ghost] =
        ghost_cell(kind, in, {side, grid.dy, phi.phi_center(ghost) - phi.phi_center(inner), phi.dphi_center(ghost), face_R});
    q.rho(ghost) = g.rho;
    q.mom_y(ghost) = g.rho * g.vn;
    q.energy_tot(ghost) = g.p / (gas.gamma - 1.0) + 0.5 * g.rho * g.vn * g.vn + g.rho * phi.phi_center(ghost);
    eq.R_center(ghost) = R_ghost;
    eq.L_center(ghost) = g.eq;
  };
  apply(spec.lower, 0, -1, -1, eq.R_iface.front());
  apply(spec.upper, n - 1, n, +1, eq.R_iface.back());
}

void fill_ghosts_2d(ConservedState2D& q, EquilibriumField2D& eq, const BoundarySpec2D& spec,
                    const PotentialField2D& phi, const Grid2D& g, const GasParams& gas) {
  auto store = [&](int j, int k, double rho, double u, double v, double p) {
    q.rho(j, k) = rho;
    q.mom_x(j, k) = rho * u;
    q.mom_y(j, k) = rho * v;
    q.energy_tot(j, k) = p / (gas.gamma - 1.0) + 0.5 * rho * (u * u + v * v) + rho * phi.phi_center(j, k);
  };
  for (int k = 0; k < g.ny; ++k) {
    auto x_edge = [&](BoundaryKind kind, int inner, int ghost, int side, double face_Q) {
      const Primitive2D w = primitive_at(q, phi, gas, inner, k);
      const EdgeCell in{w.rho, w.u, w.v, w.p, eq.K_center(inner, k)};
      const auto [c, Q_ghost] =
          ghost_cell(kind, in, {side, g.dx, phi.phi_center(ghost, k) - phi.phi_center(inner, k), phi.dphix_center(ghost, k), face_Q});
      store(ghost, k, c.rho, c.vn, c.vt, c.p);
      eq.Q_center(ghost, k) = Q_ghost;
      eq.K_center(ghost, k) = c.eq;
    };
    x_edge(spec.left, 0, -1, -1, eq.Q_iface(0, k));
    x_edge(spec.right, g.nx - 1, g.nx, +1, eq.Q_iface(g.nx, k));
  }
  for (int j = 0; j < g.nx; ++j) {
    auto y_edge = [&](BoundaryKind kind, int inner, int ghost, int side, double face_R) {
      const Primitive2D w = primitive_at(q, phi, gas, j, inner);
      const EdgeCell in{w.rho, w.v, w.u, w.p, eq.L_center(j, inner)};
      const auto [c, R_ghost] =
          ghost_cell(kind, in, {side, g.dy, phi.phi_center(j, ghost) - phi.phi_center(j, inner), phi.dphiy_center(j, ghost), face_R});
      store(j, ghost, c.rho, c.vt, c.vn, c.p);
      eq.R_center(j, ghost) = R_ghost;
      eq.L_center(j, ghost) = c.eq;
    };
    y_edge(spec.bottom, 0, -1, -1, eq.R_iface(j, 0));
    y_edge(spec.top, g.ny - 1, g.ny, +1, eq.R_iface(j, g.ny));
  }
}

double stable_dt_1d(const std::vector<SpeedPair>& speeds, const Grid1D& grid, double cfl, double t_remaining) {
  double smax = 0.0;
  for (const SpeedPair& s : speeds) smax = std::max({smax, s.b_plus, -s.b_minus});
  if (smax <= 0.0) return t_remaining;
  return std::min(cfl * grid.dy / smax, t_remaining);
}

double stable_dt_2d(const DirectionalSpeeds2D& speeds, const Grid2D& g, double cfl, double t_remaining) {
  double amax = 0.0, bmax = 0.0;
  for (int j = 0; j <= g.nx; ++j)
    for (int k = 0; k < g.ny; ++k) amax = std::max({amax, speeds.x(j, k).b_plus, -speeds.x(j, k).b_minus});
  for (int j = 0; j < g.nx; ++j)
    for (int k = 0; k <= g.ny; ++k) bmax = std::max({bmax, speeds.y(j, k).b_plus, -speeds.y(j, k).b_minus});
  double dt = t_remaining;
  if (amax > 0.0) dt = std::min(dt, cfl * g.dx / amax);
  if (bmax > 0.0) dt = std::min(dt, cfl * g.dy / bmax);
  return dt;
}

Solver1D::Solver1D(Grid1D grid, const Potential1D& potential, GasParams gas, SchemeConfig scheme, BoundarySpec1D bc)
    : grid_(grid), phi_(potential, grid), gas_(gas), scheme_(scheme), bc_(bc) {}

Solver1D::Evaluation Solver1D::evaluate(const ConservedState1D& q) const {
  const int n = grid_.n_cells;
  Evaluation ev{ConservedState1D(n), std::vector<Vec3>(static_cast<std::size_t>(n) + 1),
                std::vector<SpeedPair>(static_cast<std::size_t>(n) + 1), q, compute_R_1d(q.rho, phi_, grid_)};
  ConservedState1D& s = ev.with_ghosts;
  EquilibriumField1D& eq = ev.eq;

  for (int k = 0; k < n; ++k) {
    if (!(s.rho(k) > 0.0)) bad_center("density", s.rho(k), std::to_string(k));
    const Primitive1D w = primitive_at(s, phi_, gas_, k);
    if (!(w.p > 0.0)) bad_center("pressure", w.p, std::to_string(k));
    eq.L_center(k) = w.p + eq.R_center(k);
  }
  fill_ghosts_1d(s, eq, bc_, phi_, grid_, gas_);

  InterfaceValues1D iv = reconstruct_1d(s, eq, phi_, grid_, gas_, scheme_.theta, scheme_.scheme);
  if (bc_.lower == BoundaryKind::reflecting) mirror_face_1d(iv.north, -1, iv.south, 0);
  if (bc_.upper == BoundaryKind::reflecting) mirror_face_1d(iv.south, n, iv.north, n - 1);
  for (int i = 0; i <= n; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    const FaceState1D left = north_face(iv, i - 1);
    const FaceState1D right = south_face(iv, i);
    ev.speeds[ii] = local_speeds(left, right, gas_);
    if (scheme_.scheme == Scheme::well_balanced) {
      const double La = eq.L_center(i - 1), Lb = eq.L_center(i);
      const double psi = psi_1d(La, Lb, grid_.dy, grid_.length(), std::max(La, Lb));
      ev.flux[ii] = flux_wb_1d(left, right, ev.speeds[ii], psi, scheme_.cutoff);
    } else {
      ev.flux[ii] = flux_baseline_1d(left, right, ev.speeds[ii]);
    }
  }
  for (int k = 0; k < n; ++k) {
    const Vec3& up = ev.flux[static_cast<std::size_t>(k + 1)];
    const Vec3& lo = ev.flux[static_cast<std::size_t>(k)];
    ev.rhs.rho(k) = -(up[0] - lo[0]) / grid_.dy;
    ev.rhs.mom_y(k) = -(up[1] - lo[1]) / grid_.dy;
    ev.rhs.energy_tot(k) = -(up[2] - lo[2]) / grid_.dy;
  }
  return ev;
}

double Solver1D::stable_dt(const ConservedState1D& q, double cfl, double t_remaining) const {
  return stable_dt_1d(evaluate(q).speeds, grid_, cfl, t_remaining);
}

Solver2D::Solver2D(Grid2D grid, const Potential2D& potential, GasParams gas, SchemeConfig scheme, BoundarySpec2D bc)
    : grid_(grid), phi_(potential, grid), gas_(gas), scheme_(scheme), bc_(bc) {}

Solver2D::Evaluation Solver2D::evaluate(const ConservedState2D& q) const {
  const Grid2D& g = grid_;
  Evaluation ev{ConservedState2D(g.nx, g.ny), {}, {}, q, compute_QR_2d(q.rho, phi_, g)};
  ConservedState2D& s = ev.with_ghosts;
  EquilibriumField2D& eq = ev.eq;

  for (int j = 0; j < g.nx; ++j) {
    for (int k = 0; k < g.ny; ++k) {
      const std::string where = "(" + std::to_string(j) + "," + std::to_string(k) + ")";
      if (!(s.rho(j, k) > 0.0)) bad_center("density", s.rho(j, k), where);
      const Primitive2D w = primitive_at(s, phi_, gas_, j, k);
      if (!(w.p > 0.0)) bad_center("pressure", w.p, where);
      eq.K_center(j, k) = w.p + eq.Q_center(j, k);
      eq.L_center(j, k) = w.p + eq.R_center(j, k);
    }
  }
  fill_ghosts_2d(s, eq, bc_, phi_, g, gas_);

  InterfaceValues2D iv = reconstruct_2d(s, eq, phi_, g, gas_, scheme_.theta, scheme_.scheme);
  for (int k = 0; k < g.ny; ++k) {
    if (bc_.left == BoundaryKind::reflecting) mirror_face_2d(iv.east, -1, k, iv.west, 0, k, true);
    if (bc_.right == BoundaryKind::reflecting) mirror_face_2d(iv.west, g.nx, k, iv.east, g.nx - 1, k, true);
  }
  for (int j = 0; j < g.nx; ++j) {
    if (bc_.bottom == BoundaryKind::reflecting) mirror_face_2d(iv.north, j, -1, iv.south, j, 0, false);
    if (bc_.top == BoundaryKind::reflecting) mirror_face_2d(iv.south, j, g.ny, iv.north, j, g.ny - 1, false);
  }
  ev.speeds = local_speeds_2d(iv, g, gas_);
  ev.fluxes = scheme_.scheme == Scheme::well_balanced
                  ? flux_wb_2d(iv, ev.speeds, eq, scheme_.cutoff, g, scheme_.psi_scale)
                  : flux_baseline_2d(iv, ev.speeds, g);

  const Fluxes2D& f = ev.fluxes;
  for (int j = 0; j < g.nx; ++j) {
    for (int k = 0; k < g.ny; ++k) {
      const Vec4 &Fe = f.F(j + 1, k), &Fw = f.F(j, k), &Gn = f.G(j, k + 1), &Gs = f.G(j, k);
      ev.rhs.rho(j, k) = -(Fe[0] - Fw[0]) / g.dx - (Gn[0] - Gs[0]) / g.dy;
      ev.rhs.mom_x(j, k) = -(Fe[1] - Fw[1]) / g.dx - (Gn[1] - Gs[1]) / g.dy;
      ev.rhs.mom_y(j, k) = -(Fe[2] - Fw[2]) / g.dx - (Gn[2] - Gs[2]) / g.dy;
      ev.rhs.energy_tot(j, k) = -(Fe[3] - Fw[3]) / g.dx - (Gn[3] - Gs[3]) / g.dy;
    }
  }
  return ev;
}

double Solver2D::stable_dt(const ConservedState2D& q, double cfl, double t_remaining) const {
  return stable_dt_2d(evaluate(q).speeds, grid_, cfl, t_remaining);
}

}  // namespace wbcu
