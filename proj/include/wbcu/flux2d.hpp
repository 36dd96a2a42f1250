// Two-dimensional central-upwind fluxes for q = (rho, rho u, rho v, E + rho phi)
// with F = (rho u, rho u^2 + K, rho u v, u (E + rho phi + p)) and
// G = (rho v, rho u v, rho v^2 + L, v (E + rho phi + p)).
//
// x-interfaces are indexed (j, k) for x_{j-1/2}, j = 0..nx; y-interfaces
// (j, k) for y_{k-1/2}, k = 0..ny.
#pragma once

#include <array>

#include "wbcu/flux1d.hpp"

namespace wbcu {

using Vec4 = std::array<double, 4>;

enum class PsiScale { local, global };

struct DirectionalSpeeds2D {
  Array2D<SpeedPair> x;  // a+, a- per x-interface
  Array2D<SpeedPair> y;  // b+, b- per y-interface
};

struct Fluxes2D {
  Array2D<Vec4> F;  // per x-interface
  Array2D<Vec4> G;  // per y-interface
};

struct AntiDiffusion2D {
  Array2D<Vec4> x;
  Array2D<Vec4> y;
};

/// Face state rotated into (normal, tangential) components.
struct FaceStateDir {
  double rho = 0.0, mn = 0.0, mt = 0.0, vn = 0.0, vt = 0.0, p = 0.0, E = 0.0, rhophi = 0.0, eq = 0.0;
  Vec4 conserved() const { return {rho, mn, mt, E + rhophi}; }
};

FaceStateDir east_face(const InterfaceValues2D& iv, int j, int k);
FaceStateDir west_face(const InterfaceValues2D& iv, int j, int k);
FaceStateDir north_face(const InterfaceValues2D& iv, int j, int k);
FaceStateDir south_face(const InterfaceValues2D& iv, int j, int k);

/// Physical flux normal to the face, in (rho, normal, tangential, energy) order.
Vec4 physical_flux_dir(const FaceStateDir& s);

/// F(q) and G(q) in conserved-component order.
Vec4 physical_flux_x(const FaceStateDir& s);
Vec4 physical_flux_y(const FaceStateDir& s);

DirectionalSpeeds2D local_speeds_2d(const InterfaceValues2D& iv, const Grid2D& grid, const GasParams& gas);

Vec4 antidiffusion_dir(const Vec4& q_left, const Vec4& q_right, const Vec4& f_left, const Vec4& f_right,
                       const SpeedPair& speeds);

/// delta q at every interior-row x-interface and interior-column y-interface,
/// in conserved-component order.
AntiDiffusion2D antidiffusion_2d(const InterfaceValues2D& iv, const DirectionalSpeeds2D& speeds, const Grid2D& grid);

/// Directional CU flux in (rho, normal, tangential, energy) order; H weights
/// the density diffusion and the gravitational/anti-diffusive energy part.
Vec4 flux_cu_dir(const FaceStateDir& left, const FaceStateDir& right, const SpeedPair& speeds, double H);

/// Cutoff indicators: x-interfaces from x-differences of K, y-interfaces from
/// y-differences of L, scaled by the directional domain length.
struct PsiField2D {
  Array2D<double> x;
  Array2D<double> y;
};
PsiField2D psi_2d(const EquilibriumField2D& eq, const Grid2D& grid, PsiScale scale);

Fluxes2D flux_wb_2d(const InterfaceValues2D& iv, const DirectionalSpeeds2D& speeds, const EquilibriumField2D& eq,
                    const CutoffParams& params, const Grid2D& grid, PsiScale scale = PsiScale::local);

Fluxes2D flux_baseline_2d(const InterfaceValues2D& iv, const DirectionalSpeeds2D& speeds, const Grid2D& grid);

}  // namespace wbcu
