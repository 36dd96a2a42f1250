// Error norms, fine-to-coarse restriction and convergence studies.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "wbcu/problems.hpp"

namespace wbcu {

/// sum |a - b| * cell_volume over all entries.
double l1_error(std::span<const double> a, std::span<const double> b, double cell_volume);
double linf_error(std::span<const double> a, std::span<const double> b);

/// Interior-only versions on fields of matching extents.
double l1_error(const Field1D& a, const Field1D& b, const Grid1D& grid);
double l1_error(const Field2D& a, const Field2D& b, const Grid2D& grid);
double linf_error(const Field2D& a, const Field2D& b);

/// Coarse value = mean of the fine cells it contains. The fine cell count
/// must be a positive multiple of the coarse one in every direction.
std::vector<double> restrict_fine_to_coarse(std::span<const double> fine, int coarse_n);
Field1D restrict_fine_to_coarse(const Field1D& fine, const Grid1D& fine_grid, const Grid1D& coarse_grid);
Field2D restrict_fine_to_coarse(const Field2D& fine, const Grid2D& fine_grid, const Grid2D& coarse_grid);

struct RunSettings {
  GasParams gas{};
  SchemeConfig scheme{};
  double cfl = 0.4;
};

/// Interior fields compared by the studies: rho, momenta and the internal
/// plus kinetic energy E (gravitational part removed).
struct ComponentFields {
  std::vector<std::string> names;
  std::vector<std::vector<double>> values;  // [component][cell], j-major in 2-D
};

ComponentFields components(const ConservedState1D& q, const PotentialField1D& phi);
ComponentFields components(const ConservedState2D& q, const PotentialField2D& phi);

enum class StudyKind {
  self_convergence,  // ||q_N - q_2N||_1 with q_2N restricted to the N grid
  deviation,         // same, after subtracting each grid's own unperturbed state
  drift,             // ||q_N(T) - q_N(0)||_1 per grid
};

/// errors[i][c] belongs to resolutions[i]; rates[i][c] compares errors[i-1]
/// and errors[i] and is NaN for i == 0, for non-doubling pairs and when
/// either error is below `machine_zero`.
struct ErrorReport {
  StudyKind kind = StudyKind::self_convergence;
  std::vector<int> resolutions;
  std::vector<std::string> components;
  std::vector<std::vector<double>> errors;
  std::vector<std::vector<double>> rates;
};

inline constexpr double kMachineZero = 1e-13;

/// Self-convergence studies need at least two resolutions forming a doubling
/// chain and report one row per resolution except the finest. 2-D problems
/// use N x N grids.
ErrorReport convergence_study(const ProblemSpec& problem, const RunSettings& settings,
                              const std::vector<int>& resolutions, double t_final, StudyKind kind);

/// Fills `rates` from `errors` and `resolutions`.
void compute_rates(ErrorReport& report);

/// Final state of a single run.
ConservedState1D final_state(const ProblemSpec1D& problem, const RunSettings& settings, int n, double t_final);
ConservedState2D final_state(const ProblemSpec2D& problem, const RunSettings& settings, int nx, int ny,
                             double t_final);

}  // namespace wbcu
