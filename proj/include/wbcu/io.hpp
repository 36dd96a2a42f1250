// Snapshot files and run configuration.
//
// Snapshots are comma-separated with a header row and one row per interior
// cell: "y,rho,v,p,E" in 1-D (k ascending) and "x,y,rho,u,v,p,E" in 2-D
// (j-major, then k). E excludes the gravitational energy. Values carry 17
// significant digits so a write/read cycle is bit-exact.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wbcu/analysis.hpp"

namespace wbcu {

/// File-system failure; the message names the path.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double v);

struct SnapshotTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Index of a column; throws UsageError when absent.
  std::size_t index(const std::string& name) const;
  std::vector<double> column(const std::string& name) const;
};

SnapshotTable snapshot_table(const ConservedState1D& q, const Grid1D& grid, const PotentialField1D& phi,
                             const GasParams& gas);
SnapshotTable snapshot_table(const ConservedState2D& q, const Grid2D& grid, const PotentialField2D& phi,
                             const GasParams& gas);

void write_table(const SnapshotTable& table, std::ostream& out);
SnapshotTable read_table(std::istream& in);

void write_snapshot(const ConservedState1D& q, const Grid1D& grid, const PotentialField1D& phi, const GasParams& gas,
                    const std::filesystem::path& path);
void write_snapshot(const ConservedState2D& q, const Grid2D& grid, const PotentialField2D& phi, const GasParams& gas,
                    const std::filesystem::path& path);
SnapshotTable read_snapshot(const std::filesystem::path& path);

/// Per-column L1 and max-norm differences of two snapshots on the same cells.
/// Coordinate columns must agree; the cell volume is inferred from the
/// coordinate spacing.
struct SnapshotDiff {
  std::vector<std::string> columns;
  std::vector<double> l1, linf;
};
SnapshotDiff compare_snapshots(const SnapshotTable& a, const SnapshotTable& b);

struct RunConfig {
  std::string problem = "isothermal-linear";
  std::string mode = "wb";  // wb | baseline
  std::optional<int> n, nx, ny;
  double theta = kDefaultTheta;
  double cfl = 0.4;
  double gamma = 1.4;
  double cutoff_c = 200.0;
  int cutoff_m = 6;
  std::string psi_scale = "local";  // local | global
  std::optional<double> t_final;
  std::optional<double> eta;
  std::string out_dir = ".";
  std::vector<double> snap_times;
  std::vector<int> resolutions;
  std::string study = "self";  // self | deviation | drift
};

/// Keys accepted by apply_setting, in documentation order.
const std::vector<std::string>& config_keys();

/// Sets one key from its textual value; throws UsageError on an unknown key
/// or a malformed value.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// key=value lines; '#' starts a comment; blank lines are ignored.
RunConfig parse_config(std::istream& in, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

/// Throws UsageError when a value is out of range.
void validate(const RunConfig& config);

RunSettings to_settings(const RunConfig& config);
StudyKind study_kind(const RunConfig& config);

}  // namespace wbcu
