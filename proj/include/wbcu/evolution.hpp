// Semi-discrete right-hand sides, ghost-cell boundary conditions, CFL time
// steps and the three-stage SSP Runge-Kutta driver.
#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "wbcu/flux1d.hpp"
#include "wbcu/flux2d.hpp"
#include "wbcu/gravity.hpp"
#include "wbcu/reconstruction.hpp"

namespace wbcu {

/// Step cap exceeded or another unrecoverable condition in the time loop.
struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class BoundaryKind {
  reflecting,              // mirror rho and the equilibrium variable, negate normal velocity
  zero_order,              // copy rho, velocities and pressure
  hydrostatic_zero_order,  // rho scaled by exp(phi_inner - phi_ghost); velocities and equilibrium variable copied
};

struct BoundarySpec1D {
  BoundaryKind lower = BoundaryKind::zero_order;
  BoundaryKind upper = BoundaryKind::zero_order;
};

struct BoundarySpec2D {
  BoundaryKind left = BoundaryKind::zero_order;
  BoundaryKind right = BoundaryKind::zero_order;
  BoundaryKind bottom = BoundaryKind::zero_order;
  BoundaryKind top = BoundaryKind::zero_order;
};

struct SchemeConfig {
  Scheme scheme = Scheme::well_balanced;
  double theta = kDefaultTheta;
  CutoffParams cutoff{};
  PsiScale psi_scale = PsiScale::local;
};

struct TimeControls {
  double cfl = 0.4;
  double t_final = 0.0;
  long max_steps = 10'000'000;
};

/// Fills the ghost cells of `state` and the ghost entries of eq.R_center and
/// eq.L_center. Requires eq.R_* and the interior of eq.L_center to be set.
void fill_ghosts_1d(ConservedState1D& state, EquilibriumField1D& eq, const BoundarySpec1D& spec,
                    const PotentialField1D& phi, const Grid1D& grid, const GasParams& gas);

/// Edge-wise 1-D rules: x-edges set K (and Q_center) ghosts, y-edges set L
/// (and R_center) ghosts. Corner ghosts are not touched.
void fill_ghosts_2d(ConservedState2D& state, EquilibriumField2D& eq, const BoundarySpec2D& spec,
                    const PotentialField2D& phi, const Grid2D& grid, const GasParams& gas);

/// dt = cfl * dy / max(b+, -b-), clamped to t_remaining; t_remaining when
/// every speed is zero.
double stable_dt_1d(const std::vector<SpeedPair>& speeds, const Grid1D& grid, double cfl, double t_remaining);
double stable_dt_2d(const DirectionalSpeeds2D& speeds, const Grid2D& grid, double cfl, double t_remaining);

class Solver1D {
 public:
  using State = ConservedState1D;

  struct Evaluation {
    ConservedState1D rhs;
    std::vector<Vec3> flux;         // interface k is y_{k-1/2}, k = 0..n
    std::vector<SpeedPair> speeds;
    ConservedState1D with_ghosts;   // input state after the ghost fill
    EquilibriumField1D eq;
  };

  Solver1D(Grid1D grid, const Potential1D& potential, GasParams gas, SchemeConfig scheme, BoundarySpec1D bc);

  Evaluation evaluate(const ConservedState1D& q) const;
  ConservedState1D rhs(const ConservedState1D& q) const { return evaluate(q).rhs; }
  double stable_dt(const ConservedState1D& q, double cfl, double t_remaining) const;

  const Grid1D& grid() const { return grid_; }
  const PotentialField1D& potential() const { return phi_; }
  const GasParams& gas() const { return gas_; }
  const SchemeConfig& scheme() const { return scheme_; }

 private:
  Grid1D grid_;
  PotentialField1D phi_;
  GasParams gas_;
  SchemeConfig scheme_;
  BoundarySpec1D bc_;
};

class Solver2D {
 public:
  using State = ConservedState2D;

  struct Evaluation {
    ConservedState2D rhs;
    Fluxes2D fluxes;
    DirectionalSpeeds2D speeds;
    ConservedState2D with_ghosts;
    EquilibriumField2D eq;
  };

  Solver2D(Grid2D grid, const Potential2D& potential, GasParams gas, SchemeConfig scheme, BoundarySpec2D bc);

  Evaluation evaluate(const ConservedState2D& q) const;
  ConservedState2D rhs(const ConservedState2D& q) const { return evaluate(q).rhs; }
  double stable_dt(const ConservedState2D& q, double cfl, double t_remaining) const;

  const Grid2D& grid() const { return grid_; }
  const PotentialField2D& potential() const { return phi_; }
  const GasParams& gas() const { return gas_; }
  const SchemeConfig& scheme() const { return scheme_; }

 private:
  Grid2D grid_;
  PotentialField2D phi_;
  GasParams gas_;
  SchemeConfig scheme_;
  BoundarySpec2D bc_;
};

/// q1 = q + dt L(q); q2 = 3/4 q + 1/4 (q1 + dt L(q1)); q_next = 1/3 q + 2/3 (q2 + dt L(q2)).
template <class State, class Rhs>
State ssp_rk3_step(const State& q, double dt, Rhs&& rhs) {
  const State q1 = q + dt * rhs(q);
  const State q2 = 0.75 * q + 0.25 * (q1 + dt * rhs(q1));
  return (1.0 / 3.0) * q + (2.0 / 3.0) * (q2 + dt * rhs(q2));
}

template <class State>
struct Snapshot {
  double t = 0.0;
  State state;
};

/// Advances from t = 0 to controls.t_final. The time step is chosen once per
/// step from the pre-step state and clamped so every requested output time
/// (and t_final) is hit exactly. The initial state is always recorded first
/// and the final state last.
template <class Solver>
std::vector<Snapshot<typename Solver::State>> run(const Solver& solver, typename Solver::State initial,
                                                  const TimeControls& controls, std::vector<double> output_times = {}) {
  using State = typename Solver::State;
  std::vector<Snapshot<State>> out;
  out.push_back({0.0, initial});
  if (controls.t_final <= 0.0) return out;

  std::vector<double> stops;
  for (double t : output_times)
    if (t > 0.0 && t < controls.t_final) stops.push_back(t);
  std::sort(stops.begin(), stops.end());
  stops.push_back(controls.t_final);

  State q = std::move(initial);
  double t = 0.0;
  long steps = 0;
  for (double stop : stops) {
    while (t < stop) {
      if (steps >= controls.max_steps) {
        std::ostringstream os;
        os << "step cap of " << controls.max_steps << " reached at t=" << t << " before t_final=" << controls.t_final;
        throw NumericalFailure(os.str());
      }
      try {
        const double dt = solver.stable_dt(q, controls.cfl, stop - t);
        q = ssp_rk3_step(q, dt, [&](const State& s) { return solver.rhs(s); });
        t = (stop - t <= dt) ? stop : t + dt;
      } catch (const StateError& e) {
        std::ostringstream os;
        os << e.what() << " (step " << steps << ", t=" << t << ")";
        throw StateError(os.str());
      } catch (const DomainError& e) {
        std::ostringstream os;
        os << e.what() << " (step " << steps << ", t=" << t << ")";
        throw StateError(os.str());
      }
      ++steps;
    }
    out.push_back({t, q});
  }
  return out;
}

}  // namespace wbcu
