#include "wbcu/flux1d.hpp"

#include <algorithm>
#include <cmath>

namespace wbcu {

FaceState1D north_face(const InterfaceValues1D& iv, int k) {
  const Faces1D& f = iv.north;
  return {f.rho(k), f.mom(k), f.v(k), f.p(k), f.E(k), f.rhophi(k), f.eq(k)};
}

FaceState1D south_face(const InterfaceValues1D& iv, int k) {
  const Faces1D& f = iv.south;
  return {f.rho(k), f.mom(k), f.v(k), f.p(k), f.E(k), f.rhophi(k), f.eq(k)};
}

Vec3 physical_flux_1d(const FaceState1D& s) {
  return {s.rho * s.v, s.rho * s.v * s.v + s.L, s.v * (s.E + s.rhophi + s.p)};
}

SpeedPair local_speeds(double vN, double cN, double vS, double cS) {
  return {std::max({vN + cN, vS + cS, 0.0}), std::min({vN - cN, vS - cS, 0.0})};
}

SpeedPair local_speeds(const FaceState1D& north_of_k, const FaceState1D& south_of_kp1, const GasParams& gas) {
  return local_speeds(north_of_k.v, sound_speed(north_of_k.rho, north_of_k.p, gas), south_of_kp1.v,
                      sound_speed(south_of_kp1.rho, south_of_kp1.p, gas));
}

double cutoff_H(double psi, const CutoffParams& params) {
  const double x = std::pow(params.C * psi, params.m);
  if (std::isinf(x)) return 1.0;
  return x / (1.0 + x);
}

double psi_1d(double L_k, double L_kp1, double dy, double domain_length, double L_scale) {
  if (!(L_scale > 0.0)) throw StateError("equilibrium scale for the cutoff indicator must be positive");
  return std::abs(L_kp1 - L_k) / dy * domain_length / L_scale;
}

Vec3 antidiffusion_1d(const Vec3& qN, const Vec3& qS, const Vec3& GN, const Vec3& GS, const SpeedPair& sp) {
  const double gap = sp.b_plus - sp.b_minus;
  if (gap < kDegenerateSpeedGap) return {0.0, 0.0, 0.0};
  Vec3 dq{};
  for (std::size_t i = 0; i < 3; ++i) {
    const double star = (sp.b_plus * qS[i] - sp.b_minus * qN[i] - (GS[i] - GN[i])) / gap;
    dq[i] = minmod(qS[i] - star, star - qN[i]);
  }
  return dq;
}

Vec3 flux_cu_1d(const FaceState1D& l, const FaceState1D& r, const SpeedPair& sp, double H) {
  const Vec3 Gl = physical_flux_1d(l);
  const Vec3 Gr = physical_flux_1d(r);
  const double gap = sp.b_plus - sp.b_minus;
  if (gap < kDegenerateSpeedGap) return {0.5 * (Gl[0] + Gr[0]), 0.5 * (Gl[1] + Gr[1]), 0.5 * (Gl[2] + Gr[2])};

  const Vec3 dq = antidiffusion_1d(l.conserved(), r.conserved(), Gl, Gr, sp);
  const double beta = sp.b_plus * sp.b_minus / gap;
  Vec3 f{};
  // Increment form: exact G(q) when both sides agree.
  for (std::size_t i = 0; i < 3; ++i) f[i] = Gl[i] + sp.b_minus * (Gl[i] - Gr[i]) / gap;
  f[0] += beta * H * (r.rho - l.rho - dq[0]);
  f[1] += beta * (r.mom - l.mom - dq[1]);
  f[2] += beta * (r.E - l.E + H * (r.rhophi - l.rhophi - dq[2]));
  return f;
}

Vec3 flux_baseline_1d(const FaceState1D& left, const FaceState1D& right, const SpeedPair& speeds) {
  return flux_cu_1d(left, right, speeds, 1.0);
}

Vec3 flux_wb_1d(const FaceState1D& left, const FaceState1D& right, const SpeedPair& speeds, double psi,
                const CutoffParams& params) {
  return flux_cu_1d(left, right, speeds, cutoff_H(psi, params));
}

}  // namespace wbcu
