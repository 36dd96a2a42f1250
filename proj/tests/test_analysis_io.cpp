#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "wbcu/io.hpp"

using namespace wbcu;
using wbcu::test::kGas;

namespace {

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "wbcu_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("L1 and max-norm differences") {
  const std::vector<double> a{1.0, 2.0, 3.0, 4.0}, b{1.5, 2.5, 3.5, 4.5};
  CHECK(l1_error(a, a, 0.25) == 0.0);
  CHECK(l1_error(a, b, 0.25) == doctest::Approx(0.5 * 4 * 0.25));
  CHECK(linf_error(a, b) == doctest::Approx(0.5));
  CHECK(l1_error(a, b, 0.1) == l1_error(b, a, 0.1));
  const std::vector<double> c{0.0, 0.0, 0.0, 0.0};
  CHECK(l1_error(a, c, 1.0) <= l1_error(a, b, 1.0) + l1_error(b, c, 1.0));
  CHECK_THROWS_AS(l1_error(a, std::vector<double>{1.0}, 1.0), UsageError);
  const Grid1D g(0.0, 1.0, 4);
  Field1D f(4, 1.0), h(4, 1.25);
  f(-1) = 100.0;
  CHECK(l1_error(f, h, g) == doctest::Approx(0.25));
  const Grid2D g2(0.0, 1.0, 0.0, 2.0, 4, 5);
  CHECK(l1_error(Field2D(4, 5, 1.0), Field2D(4, 5, 3.0), g2) == doctest::Approx(2.0 * 2.0));
  CHECK(linf_error(Field2D(4, 5, 1.0), Field2D(4, 5, 3.0)) == 2.0);
  CHECK_THROWS_AS(l1_error(Field2D(4, 4), Field2D(4, 5), g2), UsageError);
}

TEST_CASE("fine-to-coarse restriction") {
  SUBCASE("constant field") {
    const std::vector<double> fine(40, 2.5);
    for (double v : restrict_fine_to_coarse(fine, 10)) CHECK(v == 2.5);
  }
  SUBCASE("linear field gives coarse cell averages") {
    const Grid1D fg(0.0, 1.0, 2000), cg(0.0, 1.0, 100);
    Field1D fine(2000);
    for (int k = 0; k < 2000; ++k) fine(k) = 3.0 - 2.0 * fg.center(k);
    const Field1D coarse = restrict_fine_to_coarse(fine, fg, cg);
    for (int k = 0; k < 100; ++k) CHECK(coarse(k) == doctest::Approx(3.0 - 2.0 * cg.center(k)).epsilon(1e-13));
  }
  SUBCASE("groups of twenty") {
    std::vector<double> fine(2000, 0.0);
    for (std::size_t i = 0; i < 20; ++i) fine[i] = 1.0;
    const std::vector<double> c = restrict_fine_to_coarse(fine, 100);
    CHECK(c[0] == 1.0);
    CHECK(c[1] == 0.0);
  }
  SUBCASE("2-D") {
    const Grid2D fg(0.0, 1.0, 0.0, 1.0, 8, 12), cg(0.0, 1.0, 0.0, 1.0, 4, 3);
    Field2D fine(8, 12);
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 12; ++k) fine(j, k) = fg.xc(j) + 2.0 * fg.yc(k);
    const Field2D c = restrict_fine_to_coarse(fine, fg, cg);
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 3; ++k) CHECK(c(j, k) == doctest::Approx(cg.xc(j) + 2.0 * cg.yc(k)).epsilon(1e-14));
    CHECK_THROWS_AS(restrict_fine_to_coarse(fine, fg, Grid2D(0.0, 1.0, 0.0, 1.0, 3, 3)), UsageError);
  }
  SUBCASE("non-multiple resolutions") {
    CHECK_THROWS_AS(restrict_fine_to_coarse(std::vector<double>(10, 1.0), 3), UsageError);
    CHECK_THROWS_AS(restrict_fine_to_coarse(std::vector<double>(10, 1.0), 20), UsageError);
  }
}

TEST_CASE("experimental rates") {
  ErrorReport r;
  r.resolutions = {100, 200, 400, 1000};
  r.components = {"rho"};
  r.errors = {{4e-4}, {1e-4}, {1e-16}, {1e-6}};
  compute_rates(r);
  CHECK(std::isnan(r.rates[0][0]));
  CHECK(r.rates[1][0] == doctest::Approx(2.0));
  CHECK(std::isnan(r.rates[2][0]));
  CHECK(std::isnan(r.rates[3][0]));
}

TEST_CASE("drift study of a balanced state reports machine zero") {
  const ProblemSpec problem = make_problem("isothermal-linear", 0.0);
  const ErrorReport r = convergence_study(problem, {}, {25, 50}, 0.05, StudyKind::drift);
  REQUIRE(r.errors.size() == 2);
  for (const auto& row : r.errors)
    for (double e : row) CHECK(e <= kMachineZero);
  for (const auto& row : r.rates)
    for (double v : row) CHECK(std::isnan(v));
  CHECK(r.components == std::vector<std::string>{"rho", "mom_y", "E"});
}

TEST_CASE("self-convergence studies need a doubling chain") {
  const ProblemSpec problem = make_problem("isothermal-linear");
  CHECK_THROWS_AS(convergence_study(problem, {}, {25}, 0.01, StudyKind::self_convergence), UsageError);
  CHECK_THROWS_AS(convergence_study(problem, {}, {25, 60}, 0.01, StudyKind::self_convergence), UsageError);
  const ErrorReport r = convergence_study(problem, {}, {25, 50, 100}, 0.01, StudyKind::deviation);
  CHECK(r.resolutions == std::vector<int>{25, 50});
  CHECK(r.errors[0][0] > 0.0);
}

}  // TEST_SUITE

TEST_SUITE("io") {

TEST_CASE("snapshot layout") {
  const Grid1D g(0.0, 1.0, 3);
  const PotentialField1D phi(test::linear_potential_1d(), g);
  const ConservedState1D q = test::uniform_state_1d(3, 1.0, 0.5, 1.0, phi);
  std::ostringstream os;
  write_table(snapshot_table(q, g, phi, kGas), os);
  std::istringstream is(os.str());
  std::string line;
  int lines = 0;
  std::getline(is, line);
  CHECK(line == "y,rho,v,p,E");
  ++lines;
  while (std::getline(is, line)) ++lines;
  CHECK(lines == 4);
  const SnapshotTable t = snapshot_table(q, g, phi, kGas);
  CHECK(t.rows[1][t.index("E")] == doctest::Approx(energy_from_pressure(1.0, 0.5, 1.0, kGas)).epsilon(1e-15));
  CHECK_THROWS_AS(t.index("u"), UsageError);
}

TEST_CASE("2-D snapshot order") {
  const Grid2D g(0.0, 1.0, 0.0, 1.0, 3, 4);
  const PotentialField2D phi(test::zero_potential_2d(), g);
  const SnapshotTable t = snapshot_table(test::uniform_state_2d(3, 4, 1.0, 0.1, 0.2, 1.0, phi), g, phi, kGas);
  CHECK(t.columns == std::vector<std::string>{"x", "y", "rho", "u", "v", "p", "E"});
  REQUIRE(t.rows.size() == 12);
  CHECK(t.rows[1][0] == doctest::Approx(g.xc(0)));
  CHECK(t.rows[1][1] == doctest::Approx(g.yc(1)));
  CHECK(t.rows[4][0] == doctest::Approx(g.xc(1)));
}

TEST_CASE("snapshot files round-trip exactly") {
  const Grid1D g(0.0, 1.0, 7);
  const PotentialField1D phi(test::linear_potential_1d(), g);
  ConservedState1D q = test::uniform_state_1d(7, 1.0, 0.0, 1.0, phi);
  for (int k = 0; k < 7; ++k) {
    q.rho(k) = 1.0 / (3.0 + k);
    q.mom_y(k) = std::sqrt(2.0) * k / 7.0 * q.rho(k);
    q.energy_tot(k) = std::exp(0.1 * k) + 1.0;
  }
  const auto path = scratch_dir() / "roundtrip.csv";
  write_snapshot(q, g, phi, kGas, path);
  const SnapshotTable a = snapshot_table(q, g, phi, kGas), b = read_snapshot(path);
  CHECK(a.columns == b.columns);
  CHECK(a.rows == b.rows);
  const SnapshotDiff d = compare_snapshots(a, b);
  for (double v : d.l1) CHECK(v == 0.0);
  CHECK_THROWS_AS(read_snapshot(scratch_dir() / "missing.csv"), IoError);
  CHECK_THROWS_AS(write_snapshot(q, g, phi, kGas, scratch_dir() / "no_such_dir" / "x.csv"), IoError);
}

TEST_CASE("snapshot comparison") {
  SnapshotTable a{{"y", "rho"}, {{0.25, 1.0}, {0.75, 2.0}}};
  SnapshotTable b{{"y", "rho"}, {{0.25, 1.5}, {0.75, 2.0}}};
  const SnapshotDiff d = compare_snapshots(a, b);
  REQUIRE(d.columns == std::vector<std::string>{"rho"});
  CHECK(d.l1[0] == doctest::Approx(0.25));
  CHECK(d.linf[0] == doctest::Approx(0.5));
  b.rows[1][0] = 0.8;
  CHECK_THROWS_AS(compare_snapshots(a, b), UsageError);
  std::istringstream bad("y,rho\n0.1,1,2\n");
  CHECK_THROWS_AS(read_table(bad), UsageError);
}

TEST_CASE("configuration files") {
  std::istringstream in(
      "# isothermal run\n"
      "problem = isothermal-sine\n"
      "mode=baseline   # comment\n"
      "\n"
      "n = 200\n"
      "theta = 1.5\n"
      "snap_times = 0.1, 0.2\n"
      "resolutions = 50,100\n"
      "psi_scale = global\n");
  const RunConfig c = parse_config(in);
  CHECK(c.problem == "isothermal-sine");
  CHECK(c.mode == "baseline");
  CHECK(c.n == 200);
  CHECK(c.theta == 1.5);
  CHECK(c.snap_times == std::vector<double>{0.1, 0.2});
  CHECK(c.resolutions == std::vector<int>{50, 100});
  CHECK_NOTHROW(validate(c));
  const RunSettings s = to_settings(c);
  CHECK(s.scheme.scheme == Scheme::baseline);
  CHECK(s.scheme.psi_scale == PsiScale::global);
  CHECK(s.scheme.theta == 1.5);
  CHECK(s.cfl == 0.4);

  std::istringstream unknown("colour = red\n");
  CHECK_THROWS_AS(parse_config(unknown), UsageError);
  std::istringstream malformed("n = ten\n");
  CHECK_THROWS_AS(parse_config(malformed), UsageError);
  std::istringstream no_eq("problem\n");
  CHECK_THROWS_AS(parse_config(no_eq), UsageError);

  RunConfig r;
  r.theta = 2.5;
  CHECK_THROWS_AS(validate(r), UsageError);
  r = {};
  r.cfl = 1.0;
  CHECK_THROWS_AS(validate(r), UsageError);
  r = {};
  r.problem = "unknown";
  CHECK_THROWS_AS(validate(r), UsageError);
  r = {};
  r.mode = "fast";
  CHECK_THROWS_AS(validate(r), UsageError);
  CHECK_THROWS_AS(load_config(scratch_dir() / "absent.cfg"), IoError);
}

}  // TEST_SUITE
