// Command-line front end.
//
//   wbcu run          single simulation, snapshots written to out_dir
//   wbcu steady-check drift of an unperturbed steady state
//   wbcu converge     error/rate table over a chain of resolutions
//   wbcu compare A B  L1 and max-norm differences of two snapshot files
//
// Exit codes: 0 success, 2 usage error, 3 numerical failure, 4 I/O error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "wbcu/io.hpp"

namespace {

using namespace wbcu;

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

struct Overrides {
  std::string config_path;
  std::map<std::string, std::string> values;
};

void add_config_options(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "key=value configuration file");
  for (const std::string& key : config_keys())
    cmd->add_option("--" + key, o.values[key], "overrides '" + key + "' from the configuration file");
}

RunConfig resolve(const Overrides& o) {
  RunConfig c;
  if (!o.config_path.empty()) c = load_config(o.config_path);
  for (const auto& [key, value] : o.values)
    if (!value.empty()) apply_setting(c, key, value);
  validate(c);
  return c;
}

std::string time_tag(double t) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(4);
  os << t;
  return os.str();
}

std::filesystem::path prepare_dir(const RunConfig& c) {
  std::error_code ec;
  std::filesystem::create_directories(c.out_dir, ec);
  if (ec) throw IoError("cannot create output directory '" + c.out_dir + "': " + ec.message());
  return c.out_dir;
}

std::vector<double> output_times(const RunConfig& c, const std::vector<double>& defaults) {
  return c.snap_times.empty() ? defaults : c.snap_times;
}

int cmd_run(const RunConfig& c) {
  const ProblemSpec problem = make_problem(c.problem, c.eta);
  const RunSettings s = to_settings(c);
  const std::filesystem::path dir = prepare_dir(c);
  const std::string stem = c.problem + "_" + c.mode;
  auto emit = [&](double t, const std::filesystem::path& path) {
    std::printf("t=%.6g -> %s\n", t, path.string().c_str());
  };
  if (const auto* p = std::get_if<ProblemSpec1D>(&problem)) {
    const Grid1D g = p->grid(c.n.value_or(p->default_n));
    const Solver1D solver(g, p->potential, s.gas, s.scheme, p->bc);
    TimeControls tc;
    tc.cfl = s.cfl;
    tc.t_final = c.t_final.value_or(p->t_final);
    for (const auto& snap : run(solver, p->initial(g, s.gas), tc, output_times(c, p->output_times))) {
      const auto path = dir / (stem + "_t" + time_tag(snap.t) + ".csv");
      write_snapshot(snap.state, g, solver.potential(), s.gas, path);
      emit(snap.t, path);
    }
  } else {
    const auto& p2 = std::get<ProblemSpec2D>(problem);
    const Grid2D g = p2.grid(c.nx.value_or(c.n.value_or(p2.default_nx)), c.ny.value_or(c.n.value_or(p2.default_ny)));
    const Solver2D solver(g, p2.potential, s.gas, s.scheme, p2.bc);
    TimeControls tc;
    tc.cfl = s.cfl;
    tc.t_final = c.t_final.value_or(p2.t_final);
    for (const auto& snap : run(solver, p2.initial(g, s.gas), tc, output_times(c, p2.output_times))) {
      const auto path = dir / (stem + "_t" + time_tag(snap.t) + ".csv");
      write_snapshot(snap.state, g, solver.potential(), s.gas, path);
      emit(snap.t, path);
    }
  }
  return 0;
}

void print_drift(const ComponentFields& a, const ComponentFields& b, double volume) {
  std::printf("component,l1_drift,max_drift\n");
  for (std::size_t i = 0; i < a.names.size(); ++i)
    std::printf("%s,%s,%s\n", a.names[i].c_str(), format_double(l1_error(a.values[i], b.values[i], volume)).c_str(),
                format_double(linf_error(a.values[i], b.values[i])).c_str());
}

int cmd_steady_check(const RunConfig& c) {
  const ProblemSpec problem = make_problem(c.problem, 0.0);
  const RunSettings s = to_settings(c);
  if (const auto* p = std::get_if<ProblemSpec1D>(&problem)) {
    if (!p->equilibrium) throw UsageError("problem '" + c.problem + "' has no steady state");
    const Grid1D g = p->grid(c.n.value_or(p->default_n));
    const ConservedState1D q0 = p->initial(g, s.gas);
    const ConservedState1D q = final_state(*p, s, g.n_cells, c.t_final.value_or(p->t_final));
    const PotentialField1D phi(p->potential, g);
    print_drift(components(q, phi), components(q0, phi), g.dy);
  } else {
    const auto& p2 = std::get<ProblemSpec2D>(problem);
    if (!p2.equilibrium) throw UsageError("problem '" + c.problem + "' has no steady state");
    const Grid2D g = p2.grid(c.nx.value_or(c.n.value_or(p2.default_nx)), c.ny.value_or(c.n.value_or(p2.default_ny)));
    const ConservedState2D q0 = p2.initial(g, s.gas);
    const ConservedState2D q = final_state(p2, s, g.nx, g.ny, c.t_final.value_or(p2.t_final));
    const PotentialField2D phi(p2.potential, g);
    print_drift(components(q, phi), components(q0, phi), g.dx * g.dy);
  }
  return 0;
}

int cmd_converge(const RunConfig& c) {
  const ProblemSpec problem = make_problem(c.problem, c.eta);
  const bool one_d = std::holds_alternative<ProblemSpec1D>(problem);
  std::vector<int> res = c.resolutions;
  if (res.empty()) res = one_d ? std::vector<int>{100, 200, 400, 800} : std::vector<int>{25, 50, 100};
  const double t_final =
      c.t_final.value_or(std::visit([](const auto& p) { return p.t_final; }, problem));
  const ErrorReport r = convergence_study(problem, to_settings(c), res, t_final, study_kind(c));
  std::printf("N");
  for (const std::string& name : r.components) std::printf(",%s_l1,%s_rate", name.c_str(), name.c_str());
  std::printf("\n");
  for (std::size_t i = 0; i < r.resolutions.size(); ++i) {
    std::printf("%d", r.resolutions[i]);
    for (std::size_t k = 0; k < r.components.size(); ++k) {
      const double rate = r.rates[i][k];
      if (std::isnan(rate))
        std::printf(",%.3e,--", r.errors[i][k]);
      else
        std::printf(",%.3e,%.2f", r.errors[i][k], rate);
    }
    std::printf("\n");
  }
  return 0;
}

int cmd_compare(const std::string& a, const std::string& b) {
  const SnapshotDiff d = compare_snapshots(read_snapshot(a), read_snapshot(b));
  std::printf("column,l1,linf\n");
  for (std::size_t i = 0; i < d.columns.size(); ++i)
    std::printf("%s,%s,%s\n", d.columns[i].c_str(), format_double(d.l1[i]).c_str(), format_double(d.linf[i]).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Well-balanced central-upwind solver for the Euler equations with gravity"};
  app.require_subcommand(1);

  Overrides run_o, steady_o, conv_o;
  CLI::App* run_cmd = app.add_subcommand("run", "run one simulation and write snapshots");
  add_config_options(run_cmd, run_o);
  CLI::App* steady_cmd = app.add_subcommand("steady-check", "report the drift of an unperturbed steady state");
  add_config_options(steady_cmd, steady_o);
  CLI::App* conv_cmd = app.add_subcommand("converge", "errors and experimental rates over a resolution chain");
  add_config_options(conv_cmd, conv_o);
  std::string file_a, file_b;
  CLI::App* cmp_cmd = app.add_subcommand("compare", "L1 and max-norm differences of two snapshots");
  cmp_cmd->add_option("first", file_a, "snapshot file")->required();
  cmp_cmd->add_option("second", file_b, "snapshot file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run_cmd) return cmd_run(resolve(run_o));
    if (*steady_cmd) return cmd_steady_check(resolve(steady_o));
    if (*conv_cmd) return cmd_converge(resolve(conv_o));
    if (*cmp_cmd) return cmd_compare(file_a, file_b);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::runtime_error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::domain_error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
