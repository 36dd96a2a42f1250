#include "wbcu/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace wbcu {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (v.empty() || used != v.size()) throw UsageError("invalid number '" + v + "' for " + key);
  return out;
}

int to_int(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  long out = 0;
  try {
    out = std::stol(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (v.empty() || used != v.size()) throw UsageError("invalid integer '" + v + "' for " + key);
  return static_cast<int>(out);
}

// Uniform spacing of a coordinate column, 1 when it takes a single value.
double spacing(const std::vector<double>& coords) {
  const std::set<double> distinct(coords.begin(), coords.end());
  if (distinct.size() < 2) return 1.0;
  return (*distinct.rbegin() - *distinct.begin()) / static_cast<double>(distinct.size() - 1);
}

void write_file(const SnapshotTable& t, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_table(t, out);
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::size_t SnapshotTable::index(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw UsageError("snapshot has no column '" + name + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> SnapshotTable::column(const std::string& name) const {
  const std::size_t c = index(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[c]);
  return out;
}

SnapshotTable snapshot_table(const ConservedState1D& q, const Grid1D& g, const PotentialField1D& phi,
                             const GasParams& gas) {
  SnapshotTable t{{"y", "rho", "v", "p", "E"}, {}};
  for (int k = 0; k < g.n_cells; ++k) {
    const Primitive1D w = primitive_at(q, phi, gas, k);
    t.rows.push_back({g.center(k), q.rho(k), w.v, w.p, q.energy_tot(k) - q.rho(k) * phi.phi_center(k)});
  }
  return t;
}

SnapshotTable snapshot_table(const ConservedState2D& q, const Grid2D& g, const PotentialField2D& phi,
                             const GasParams& gas) {
  SnapshotTable t{{"x", "y", "rho", "u", "v", "p", "E"}, {}};
  for (int j = 0; j < g.nx; ++j) {
    for (int k = 0; k < g.ny; ++k) {
      const Primitive2D w = primitive_at(q, phi, gas, j, k);
      t.rows.push_back(
          {g.xc(j), g.yc(k), q.rho(j, k), w.u, w.v, w.p, q.energy_tot(j, k) - q.rho(j, k) * phi.phi_center(j, k)});
    }
  }
  return t;
}

void write_table(const SnapshotTable& t, std::ostream& out) {
  for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
  out << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << format_double(r[c]);
    out << '\n';
  }
}

SnapshotTable read_table(std::istream& in) {
  SnapshotTable t;
  std::string line;
  if (!std::getline(in, line)) throw UsageError("snapshot is empty");
  t.columns = split(trim(line), ',');
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    const std::vector<std::string> cells = split(line, ',');
    if (cells.size() != t.columns.size())
      throw UsageError("line " + std::to_string(lineno) + " has " + std::to_string(cells.size()) + " fields, expected " +
                       std::to_string(t.columns.size()));
    std::vector<double> row;
    for (std::size_t c = 0; c < cells.size(); ++c) row.push_back(to_double(t.columns[c], cells[c]));
    t.rows.push_back(std::move(row));
  }
  return t;
}

void write_snapshot(const ConservedState1D& q, const Grid1D& g, const PotentialField1D& phi, const GasParams& gas,
                    const std::filesystem::path& path) {
  write_file(snapshot_table(q, g, phi, gas), path);
}

void write_snapshot(const ConservedState2D& q, const Grid2D& g, const PotentialField2D& phi, const GasParams& gas,
                    const std::filesystem::path& path) {
  write_file(snapshot_table(q, g, phi, gas), path);
}

SnapshotTable read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return read_table(in);
}

SnapshotDiff compare_snapshots(const SnapshotTable& a, const SnapshotTable& b) {
  if (a.columns != b.columns) throw UsageError("snapshots have different columns");
  if (a.rows.size() != b.rows.size()) throw UsageError("snapshots have different row counts");
  const bool two_d = !a.columns.empty() && a.columns.front() == "x";
  const std::vector<std::string> coords = two_d ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"y"};
  double volume = 1.0;
  for (const std::string& c : coords) {
    const std::vector<double> ca = a.column(c);
    if (ca != b.column(c)) throw UsageError("snapshots differ in coordinate column '" + c + "'");
    volume *= spacing(ca);
  }
  SnapshotDiff d;
  for (const std::string& name : a.columns) {
    if (std::find(coords.begin(), coords.end(), name) != coords.end()) continue;
    const std::vector<double> ca = a.column(name), cb = b.column(name);
    d.columns.push_back(name);
    d.l1.push_back(l1_error(ca, cb, volume));
    d.linf.push_back(linf_error(ca, cb));
  }
  return d;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{"problem",   "mode",     "n",          "nx",      "ny",
                                             "theta",     "cfl",      "gamma",      "cutoff_c", "cutoff_m",
                                             "psi_scale", "t_final",  "eta",        "out_dir", "snap_times",
                                             "resolutions", "study"};
  return keys;
}

void apply_setting(RunConfig& c, const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (key == "problem") c.problem = v;
  else if (key == "mode") c.mode = v;
  else if (key == "n") c.n = to_int(key, v);
  else if (key == "nx") c.nx = to_int(key, v);
  else if (key == "ny") c.ny = to_int(key, v);
  else if (key == "theta") c.theta = to_double(key, v);
  else if (key == "cfl") c.cfl = to_double(key, v);
  else if (key == "gamma") c.gamma = to_double(key, v);
  else if (key == "cutoff_c") c.cutoff_c = to_double(key, v);
  else if (key == "cutoff_m") c.cutoff_m = to_int(key, v);
  else if (key == "psi_scale") c.psi_scale = v;
  else if (key == "t_final") c.t_final = to_double(key, v);
  else if (key == "eta") c.eta = to_double(key, v);
  else if (key == "out_dir") c.out_dir = v;
  else if (key == "study") c.study = v;
  else if (key == "snap_times") {
    c.snap_times.clear();
    for (const std::string& s : split(v, ','))
      if (!s.empty()) c.snap_times.push_back(to_double(key, s));
  } else if (key == "resolutions") {
    c.resolutions.clear();
    for (const std::string& s : split(v, ','))
      if (!s.empty()) c.resolutions.push_back(to_int(key, s));
  } else {
    throw UsageError("unknown configuration key '" + key + "'");
  }
}

RunConfig parse_config(std::istream& in, RunConfig base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("line " + std::to_string(lineno) + ": expected key=value");
    apply_setting(base, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return base;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  return parse_config(in, std::move(base));
}

void validate(const RunConfig& c) {
  const std::vector<std::string> names = problem_names();
  if (std::find(names.begin(), names.end(), c.problem) == names.end())
    throw UsageError("unknown problem '" + c.problem + "'");
  if (c.mode != "wb" && c.mode != "baseline") throw UsageError("mode must be wb or baseline");
  if (c.psi_scale != "local" && c.psi_scale != "global") throw UsageError("psi_scale must be local or global");
  if (c.study != "self" && c.study != "deviation" && c.study != "drift")
    throw UsageError("study must be self, deviation or drift");
  for (const auto& r : {c.n, c.nx, c.ny})
    if (r && *r < 3) throw UsageError("resolutions must be at least 3");
  for (int r : c.resolutions)
    if (r < 3) throw UsageError("resolutions must be at least 3");
  if (!(c.theta >= 1.0 && c.theta <= 2.0)) throw UsageError("theta must lie in [1, 2]");
  if (!(c.cfl > 0.0 && c.cfl < 1.0)) throw UsageError("cfl must lie in (0, 1)");
  if (!(c.gamma > 1.0)) throw UsageError("gamma must exceed 1");
  if (!(c.cutoff_c > 0.0) || c.cutoff_m < 1) throw UsageError("cutoff_c must be positive and cutoff_m at least 1");
  if (c.t_final && !(*c.t_final >= 0.0)) throw UsageError("t_final must be non-negative");
  if (c.eta && !(*c.eta >= 0.0)) throw UsageError("eta must be non-negative");
  for (double t : c.snap_times)
    if (!(t > 0.0)) throw UsageError("snapshot times must be positive");
}

RunSettings to_settings(const RunConfig& c) {
  RunSettings s;
  s.gas.gamma = c.gamma;
  s.scheme.scheme = c.mode == "baseline" ? Scheme::baseline : Scheme::well_balanced;
  s.scheme.theta = c.theta;
  s.scheme.cutoff = {c.cutoff_c, c.cutoff_m};
  s.scheme.psi_scale = c.psi_scale == "global" ? PsiScale::global : PsiScale::local;
  s.cfl = c.cfl;
  return s;
}

StudyKind study_kind(const RunConfig& c) {
  if (c.study == "drift") return StudyKind::drift;
  if (c.study == "deviation") return StudyKind::deviation;
  return StudyKind::self_convergence;
}

}  // namespace wbcu
