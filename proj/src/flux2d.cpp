#include "wbcu/flux2d.hpp"

#include <algorithm>
#include <cmath>

namespace wbcu {

namespace {

FaceStateDir x_state(const Faces2D& f, int j, int k) {
  return {f.rho(j, k), f.mu(j, k), f.mv(j, k), f.u(j, k), f.v(j, k), f.p(j, k), f.E(j, k), f.rhophi(j, k), f.eq(j, k)};
}

FaceStateDir y_state(const Faces2D& f, int j, int k) {
  return {f.rho(j, k), f.mv(j, k), f.mu(j, k), f.v(j, k), f.u(j, k), f.p(j, k), f.E(j, k), f.rhophi(j, k), f.eq(j, k)};
}

// (rho, normal, tangential, energy) -> conserved order for a y-face.
Vec4 from_y(const Vec4& d) { return {d[0], d[2], d[1], d[3]}; }

SpeedPair speeds_between(const FaceStateDir& l, const FaceStateDir& r, const GasParams& gas) {
  return local_speeds(l.vn, sound_speed(l.rho, l.p, gas), r.vn, sound_speed(r.rho, r.p, gas));
}

template <class HOf>
Fluxes2D assemble(const InterfaceValues2D& iv, const DirectionalSpeeds2D& speeds, const Grid2D& g, HOf&& H) {
  Fluxes2D out{Array2D<Vec4>(g.nx + 1, g.ny), Array2D<Vec4>(g.nx, g.ny + 1)};
  for (int j = 0; j <= g.nx; ++j)
    for (int k = 0; k < g.ny; ++k)
      out.F(j, k) = flux_cu_dir(east_face(iv, j - 1, k), west_face(iv, j, k), speeds.x(j, k), H(true, j, k));
  for (int j = 0; j < g.nx; ++j)
    for (int k = 0; k <= g.ny; ++k)
      out.G(j, k) = from_y(flux_cu_dir(north_face(iv, j, k - 1), south_face(iv, j, k), speeds.y(j, k), H(false, j, k)));
  return out;
}

}  // namespace

FaceStateDir east_face(const InterfaceValues2D& iv, int j, int k) { return x_state(iv.east, j, k); }
FaceStateDir west_face(const InterfaceValues2D& iv, int j, int k) { return x_state(iv.west, j, k); }
FaceStateDir north_face(const InterfaceValues2D& iv, int j, int k) { return y_state(iv.north, j, k); }
FaceStateDir south_face(const InterfaceValues2D& iv, int j, int k) { return y_state(iv.south, j, k); }

Vec4 physical_flux_dir(const FaceStateDir& s) {
  return {s.rho * s.vn, s.rho * s.vn * s.vn + s.eq, s.rho * s.vn * s.vt, s.vn * (s.E + s.rhophi + s.p)};
}

Vec4 physical_flux_x(const FaceStateDir& s) { return physical_flux_dir(s); }
Vec4 physical_flux_y(const FaceStateDir& s) { return from_y(physical_flux_dir(s)); }

DirectionalSpeeds2D local_speeds_2d(const InterfaceValues2D& iv, const Grid2D& g, const GasParams& gas) {
  DirectionalSpeeds2D s{Array2D<SpeedPair>(g.nx + 1, g.ny), Array2D<SpeedPair>(g.nx, g.ny + 1)};
  for (int j = 0; j <= g.nx; ++j)
    for (int k = 0; k < g.ny; ++k) s.x(j, k) = speeds_between(east_face(iv, j - 1, k), west_face(iv, j, k), gas);
  for (int j = 0; j < g.nx; ++j)
    for (int k = 0; k <= g.ny; ++k) s.y(j, k) = speeds_between(north_face(iv, j, k - 1), south_face(iv, j, k), gas);
  return s;
}

Vec4 antidiffusion_dir(const Vec4& ql, const Vec4& qr, const Vec4& fl, const Vec4& fr, const SpeedPair& sp) {
  const double gap = sp.b_plus - sp.b_minus;
  if (gap < kDegenerateSpeedGap) return {0.0, 0.0, 0.0, 0.0};
  Vec4 dq{};
  for (std::size_t i = 0; i < 4; ++i) {
    const double star = (sp.b_plus * qr[i] - sp.b_minus * ql[i] - (fr[i] - fl[i])) / gap;
    dq[i] = minmod(qr[i] - star, star - ql[i]);
  }
  return dq;
}

AntiDiffusion2D antidiffusion_2d(const InterfaceValues2D& iv, const DirectionalSpeeds2D& speeds, const Grid2D& g) {
  AntiDiffusion2D out{Array2D<Vec4>(g.nx + 1, g.ny), Array2D<Vec4>(g.nx, g.ny + 1)};
  for (int j = 0; j <= g.nx; ++j) {
    for (int k = 0; k < g.ny; ++k) {
      const FaceStateDir l = east_face(iv, j - 1, k), r = west_face(iv, j, k);
      out.x(j, k) = antidiffusion_dir(l.conserved(), r.conserved(), physical_flux_dir(l), physical_flux_dir(r), speeds.x(j, k));
    }
  }
  for (int j = 0; j < g.nx; ++j) {
    for (int k = 0; k <= g.ny; ++k) {
      const FaceStateDir l = north_face(iv, j, k - 1), r = south_face(iv, j, k);
      out.y(j, k) = from_y(
          antidiffusion_dir(l.conserved(), r.conserved(), physical_flux_dir(l), physical_flux_dir(r), speeds.y(j, k)));
    }
  }
  return out;
}

Vec4 flux_cu_dir(const FaceStateDir& l, const FaceStateDir& r, const SpeedPair& sp, double H) {
  const Vec4 fl = physical_flux_dir(l);
  const Vec4 fr = physical_flux_dir(r);
  const double gap = sp.b_plus - sp.b_minus;
  if (gap < kDegenerateSpeedGap)
    return {0.5 * (fl[0] + fr[0]), 0.5 * (fl[1] + fr[1]), 0.5 * (fl[2] + fr[2]), 0.5 * (fl[3] + fr[3])};

  const Vec4 dq = antidiffusion_dir(l.conserved(), r.conserved(), fl, fr, sp);
  const double alpha = sp.b_plus * sp.b_minus / gap;
  Vec4 f{};
  // Increment form: exact F(q) when both sides agree.
  for (std::size_t i = 0; i < 4; ++i) f[i] = fl[i] + sp.b_minus * (fl[i] - fr[i]) / gap;
  f[0] += alpha * H * (r.rho - l.rho - dq[0]);
  f[1] += alpha * (r.mn - l.mn - dq[1]);
  f[2] += alpha * (r.mt - l.mt - dq[2]);
  f[3] += alpha * (r.E - l.E + H * (r.rhophi - l.rhophi - dq[3]));
  return f;
}

PsiField2D psi_2d(const EquilibriumField2D& eq, const Grid2D& g, PsiScale scale) {
  PsiField2D psi{Array2D<double>(g.nx + 1, g.ny), Array2D<double>(g.nx, g.ny + 1)};
  double K_max = 0.0, L_max = 0.0;
  if (scale == PsiScale::global) {
    K_max = -HUGE_VAL;
    L_max = -HUGE_VAL;
    for (int k = 0; k < g.ny; ++k)
      for (int j = -1; j <= g.nx; ++j) K_max = std::max(K_max, eq.K_center(j, k));
    for (int j = 0; j < g.nx; ++j)
      for (int k = -1; k <= g.ny; ++k) L_max = std::max(L_max, eq.L_center(j, k));
  }
  for (int j = 0; j <= g.nx; ++j) {
    for (int k = 0; k < g.ny; ++k) {
      const double a = eq.K_center(j - 1, k), b = eq.K_center(j, k);
      psi.x(j, k) = psi_1d(a, b, g.dx, g.x_length(), scale == PsiScale::global ? K_max : std::max(a, b));
    }
  }
  for (int j = 0; j < g.nx; ++j) {
    for (int k = 0; k <= g.ny; ++k) {
      const double a = eq.L_center(j, k - 1), b = eq.L_center(j, k);
      psi.y(j, k) = psi_1d(a, b, g.dy, g.y_length(), scale == PsiScale::global ? L_max : std::max(a, b));
    }
  }
  return psi;
}

Fluxes2D flux_wb_2d(const InterfaceValues2D& iv, const DirectionalSpeeds2D& speeds, const EquilibriumField2D& eq,
                    const CutoffParams& params, const Grid2D& g, PsiScale scale) {
  const PsiField2D psi = psi_2d(eq, g, scale);
  return assemble(iv, speeds, g, [&](bool x_dir, int j, int k) {
    return cutoff_H(x_dir ? psi.x(j, k) : psi.y(j, k), params);
  });
}

Fluxes2D flux_baseline_2d(const InterfaceValues2D& iv, const DirectionalSpeeds2D& speeds, const Grid2D& g) {
  return assemble(iv, speeds, g, [](bool, int, int) { return 1.0; });
}

}  // namespace wbcu
