// One-dimensional central-upwind fluxes for q = (rho, rho v, E + rho phi) with
// the global-flux form G(q) = (rho v, rho v^2 + L, v (E + rho phi + p)).
#pragma once

#include <array>

#include "wbcu/reconstruction.hpp"

namespace wbcu {

using Vec3 = std::array<double, 3>;

/// One-sided propagation speed bounds at an interface.
struct SpeedPair {
  double b_plus = 0.0;   // >= 0
  double b_minus = 0.0;  // <= 0
};

struct CutoffParams {
  double C = 200.0;
  int m = 6;
};

/// Below this gap b+ - b- the flux degenerates to the plain average of the
/// physical fluxes with no diffusion.
inline constexpr double kDegenerateSpeedGap = 1e-10;

/// Everything the flux needs from one side of an interface.
struct FaceState1D {
  double rho = 0.0, mom = 0.0, v = 0.0, p = 0.0, E = 0.0, rhophi = 0.0, L = 0.0;

  /// Conserved vector as seen by the anti-diffusion: (rho, rho v, E + rho phi).
  Vec3 conserved() const { return {rho, mom, E + rhophi}; }
};

FaceState1D north_face(const InterfaceValues1D& iv, int k);
FaceState1D south_face(const InterfaceValues1D& iv, int k);

Vec3 physical_flux_1d(const FaceState1D& s);

SpeedPair local_speeds(double vN, double cN, double vS, double cS);

/// Speeds at interface y_{k+1/2} between cell k (north side) and k+1.
SpeedPair local_speeds(const FaceState1D& north_of_k, const FaceState1D& south_of_kp1, const GasParams& gas);

/// (C psi)^m / (1 + (C psi)^m)
double cutoff_H(double psi, const CutoffParams& params);

/// |L_{k+1} - L_k| / dy * domain_length / L_scale
double psi_1d(double L_k, double L_kp1, double dy, double domain_length, double L_scale);

/// Two-argument minmod of (qS - q*, q* - qN) per component, with q* the
/// intermediate state built from the same physical fluxes as the CU flux.
Vec3 antidiffusion_1d(const Vec3& qN, const Vec3& qS, const Vec3& GN, const Vec3& GS, const SpeedPair& speeds);

/// CU flux with the cutoff weight H applied to the density diffusion and to
/// the gravitational/anti-diffusive part of the energy diffusion. H == 1
/// gives the classical CU flux.
Vec3 flux_cu_1d(const FaceState1D& left, const FaceState1D& right, const SpeedPair& speeds, double H);

/// Classical CU flux; faces must come from the baseline reconstruction.
Vec3 flux_baseline_1d(const FaceState1D& left, const FaceState1D& right, const SpeedPair& speeds);

/// Well-balanced flux; faces must come from the equilibrium reconstruction.
Vec3 flux_wb_1d(const FaceState1D& left, const FaceState1D& right, const SpeedPair& speeds, double psi,
                const CutoffParams& params);

}  // namespace wbcu
