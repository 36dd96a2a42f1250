#include "wbcu/analysis.hpp"

#include <cmath>
#include <limits>

namespace wbcu {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw UsageError("extent mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

int multiple_of(int fine, int coarse) {
  if (coarse <= 0 || fine < coarse || fine % coarse != 0)
    throw UsageError("fine resolution " + std::to_string(fine) + " is not a multiple of coarse resolution " +
                     std::to_string(coarse));
  return fine / coarse;
}

// Flattened j-major fields.
std::vector<double> restrict_2d(std::span<const double> fine, int nxf, int nyf, int nxc, int nyc) {
  const int fx = multiple_of(nxf, nxc), fy = multiple_of(nyf, nyc);
  require_same_size(fine.size(), static_cast<std::size_t>(nxf) * static_cast<std::size_t>(nyf));
  std::vector<double> out(static_cast<std::size_t>(nxc) * static_cast<std::size_t>(nyc), 0.0);
  for (int j = 0; j < nxc; ++j) {
    for (int k = 0; k < nyc; ++k) {
      double sum = 0.0;
      for (int a = 0; a < fx; ++a)
        for (int b = 0; b < fy; ++b)
          sum += fine[static_cast<std::size_t>(j * fx + a) * static_cast<std::size_t>(nyf) +
                      static_cast<std::size_t>(k * fy + b)];
      out[static_cast<std::size_t>(j) * static_cast<std::size_t>(nyc) + static_cast<std::size_t>(k)] = sum / (fx * fy);
    }
  }
  return out;
}

std::vector<double> flatten(const Field2D& f) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(f.nx()) * static_cast<std::size_t>(f.ny()));
  for (int j = 0; j < f.nx(); ++j)
    for (int k = 0; k < f.ny(); ++k) out.push_back(f(j, k));
  return out;
}

void subtract(ComponentFields& a, const ComponentFields& b) {
  for (std::size_t c = 0; c < a.values.size(); ++c)
    for (std::size_t i = 0; i < a.values[c].size(); ++i) a.values[c][i] -= b.values[c][i];
}

// Fields at one resolution, plus the initial or unperturbed fields the study needs.
struct Sample {
  ComponentFields final_fields, reference;
  double cell_volume = 0.0;
  int nx = 0, ny = 0;
};

Sample sample(const ProblemSpec1D& p, const RunSettings& s, int n, double t_final, StudyKind kind) {
  const Grid1D g = p.grid(n);
  const PotentialField1D phi(p.potential, g);
  const Solver1D solver(g, p.potential, s.gas, s.scheme, p.bc);
  const ConservedState1D q0 = p.initial(g, s.gas);
  TimeControls tc;
  tc.cfl = s.cfl;
  tc.t_final = t_final;
  Sample out{components(run(solver, q0, tc).back().state, phi), {}, g.dy, n, 1};
  if (kind == StudyKind::drift) out.reference = components(q0, phi);
  if (kind == StudyKind::deviation) {
    if (!p.equilibrium) throw UsageError("problem '" + p.name + "' has no unperturbed state");
    out.reference = components(p.equilibrium(g, s.gas), phi);
  }
  return out;
}

Sample sample(const ProblemSpec2D& p, const RunSettings& s, int n, double t_final, StudyKind kind) {
  const Grid2D g = p.grid(n, n);
  const PotentialField2D phi(p.potential, g);
  const Solver2D solver(g, p.potential, s.gas, s.scheme, p.bc);
  const ConservedState2D q0 = p.initial(g, s.gas);
  TimeControls tc;
  tc.cfl = s.cfl;
  tc.t_final = t_final;
  Sample out{components(run(solver, q0, tc).back().state, phi), {}, g.dx * g.dy, n, n};
  if (kind == StudyKind::drift) out.reference = components(q0, phi);
  if (kind == StudyKind::deviation) {
    if (!p.equilibrium) throw UsageError("problem '" + p.name + "' has no unperturbed state");
    out.reference = components(p.equilibrium(g, s.gas), phi);
  }
  return out;
}

}  // namespace

double l1_error(std::span<const double> a, std::span<const double> b, double cell_volume) {
  require_same_size(a.size(), b.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return sum * cell_volume;
}

double linf_error(std::span<const double> a, std::span<const double> b) {
  require_same_size(a.size(), b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double l1_error(const Field1D& a, const Field1D& b, const Grid1D& grid) {
  require_same_size(static_cast<std::size_t>(a.n()), static_cast<std::size_t>(grid.n_cells));
  require_same_size(static_cast<std::size_t>(b.n()), static_cast<std::size_t>(grid.n_cells));
  return l1_error(a.interior(), b.interior(), grid.dy);
}

double l1_error(const Field2D& a, const Field2D& b, const Grid2D& grid) {
  if (a.nx() != grid.nx || a.ny() != grid.ny || b.nx() != grid.nx || b.ny() != grid.ny)
    throw UsageError("extent mismatch between fields and grid");
  return l1_error(flatten(a), flatten(b), grid.dx * grid.dy);
}

double linf_error(const Field2D& a, const Field2D& b) {
  if (a.nx() != b.nx() || a.ny() != b.ny()) throw UsageError("extent mismatch between fields");
  return linf_error(flatten(a), flatten(b));
}

std::vector<double> restrict_fine_to_coarse(std::span<const double> fine, int coarse_n) {
  return restrict_2d(fine, static_cast<int>(fine.size()), 1, coarse_n, 1);
}

Field1D restrict_fine_to_coarse(const Field1D& fine, const Grid1D& fine_grid, const Grid1D& coarse_grid) {
  require_same_size(static_cast<std::size_t>(fine.n()), static_cast<std::size_t>(fine_grid.n_cells));
  const std::vector<double> c = restrict_fine_to_coarse(fine.interior(), coarse_grid.n_cells);
  Field1D out(coarse_grid.n_cells);
  for (int k = 0; k < coarse_grid.n_cells; ++k) out(k) = c[static_cast<std::size_t>(k)];
  return out;
}

Field2D restrict_fine_to_coarse(const Field2D& fine, const Grid2D& fg, const Grid2D& cg) {
  if (fine.nx() != fg.nx || fine.ny() != fg.ny) throw UsageError("extent mismatch between field and fine grid");
  const std::vector<double> c = restrict_2d(flatten(fine), fg.nx, fg.ny, cg.nx, cg.ny);
  Field2D out(cg.nx, cg.ny);
  for (int j = 0; j < cg.nx; ++j)
    for (int k = 0; k < cg.ny; ++k)
      out(j, k) = c[static_cast<std::size_t>(j) * static_cast<std::size_t>(cg.ny) + static_cast<std::size_t>(k)];
  return out;
}

ComponentFields components(const ConservedState1D& q, const PotentialField1D& phi) {
  ComponentFields out{{"rho", "mom_y", "E"}, {q.rho.interior(), q.mom_y.interior(), {}}};
  for (int k = 0; k < q.n(); ++k) out.values[2].push_back(q.energy_tot(k) - q.rho(k) * phi.phi_center(k));
  return out;
}

ComponentFields components(const ConservedState2D& q, const PotentialField2D& phi) {
  ComponentFields out{{"rho", "mom_x", "mom_y", "E"}, {flatten(q.rho), flatten(q.mom_x), flatten(q.mom_y), {}}};
  for (int j = 0; j < q.nx(); ++j)
    for (int k = 0; k < q.ny(); ++k) out.values[3].push_back(q.energy_tot(j, k) - q.rho(j, k) * phi.phi_center(j, k));
  return out;
}

void compute_rates(ErrorReport& r) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  r.rates.assign(r.errors.size(), std::vector<double>(r.components.size(), nan));
  for (std::size_t i = 1; i < r.errors.size(); ++i) {
    if (r.resolutions[i] != 2 * r.resolutions[i - 1]) continue;
    for (std::size_t c = 0; c < r.components.size(); ++c) {
      const double coarse = r.errors[i - 1][c], fine = r.errors[i][c];
      if (coarse > kMachineZero && fine > kMachineZero) r.rates[i][c] = std::log2(coarse / fine);
    }
  }
}

ErrorReport convergence_study(const ProblemSpec& problem, const RunSettings& settings,
                              const std::vector<int>& resolutions, double t_final, StudyKind kind) {
  if (resolutions.empty()) throw UsageError("no resolutions given");
  for (int n : resolutions)
    if (n < 3) throw UsageError("resolution " + std::to_string(n) + " is too small");
  const bool self = kind != StudyKind::drift;
  if (self) {
    if (resolutions.size() < 2) throw UsageError("self-convergence needs at least two resolutions");
    for (std::size_t i = 1; i < resolutions.size(); ++i)
      if (resolutions[i] != 2 * resolutions[i - 1]) throw UsageError("resolutions must form a doubling chain");
  }

  std::vector<Sample> samples;
  for (int n : resolutions)
    samples.push_back(std::visit([&](const auto& p) { return sample(p, settings, n, t_final, kind); }, problem));
  for (Sample& s : samples)
    if (kind == StudyKind::deviation) subtract(s.final_fields, s.reference);

  ErrorReport report;
  report.kind = kind;
  report.components = samples.front().final_fields.names;
  const std::size_t rows = self ? samples.size() - 1 : samples.size();
  for (std::size_t i = 0; i < rows; ++i) {
    const Sample& s = samples[i];
    std::vector<double> errs;
    for (std::size_t c = 0; c < report.components.size(); ++c) {
      const std::vector<double>& mine = s.final_fields.values[c];
      if (self) {
        const Sample& f = samples[i + 1];
        const std::vector<double> coarse = restrict_2d(f.final_fields.values[c], f.nx, f.ny, s.nx, s.ny);
        errs.push_back(l1_error(mine, coarse, s.cell_volume));
      } else {
        errs.push_back(l1_error(mine, s.reference.values[c], s.cell_volume));
      }
    }
    report.resolutions.push_back(resolutions[i]);
    report.errors.push_back(std::move(errs));
  }
  compute_rates(report);
  return report;
}

ConservedState1D final_state(const ProblemSpec1D& p, const RunSettings& s, int n, double t_final) {
  const Grid1D g = p.grid(n);
  TimeControls tc;
  tc.cfl = s.cfl;
  tc.t_final = t_final;
  return run(Solver1D(g, p.potential, s.gas, s.scheme, p.bc), p.initial(g, s.gas), tc).back().state;
}

ConservedState2D final_state(const ProblemSpec2D& p, const RunSettings& s, int nx, int ny, double t_final) {
  const Grid2D g = p.grid(nx, ny);
  TimeControls tc;
  tc.cfl = s.cfl;
  tc.t_final = t_final;
  return run(Solver2D(g, p.potential, s.gas, s.scheme, p.bc), p.initial(g, s.gas), tc).back().state;
}

}  // namespace wbcu
