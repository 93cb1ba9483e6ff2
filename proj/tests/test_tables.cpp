#include <array>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "filmseries/config.hpp"
#include "filmseries/errors.hpp"
#include "filmseries/reference_tables.hpp"
#include "filmseries/tables.hpp"

using namespace filmseries;

namespace {

DerivedParams reference_model() { return derive_from_gamma(reference::kGamma, reference::kEpsilon); }

}  // namespace

TEST_CASE("comparison rows") {
  const auto row = make_row(10.0, 0.14602, 0.14607);
  CHECK(row.abs_diff == doctest::Approx(5e-5));
  CHECK(row.rel_diff_pct == doctest::Approx(100.0 * 5e-5 / 0.14607));
  CHECK(make_row(1.0, 0.0, 0.0).rel_diff_pct == 0.0);
}

TEST_CASE("default grid spans eleven decades") {
  const auto grid = default_p_grid();
  REQUIRE(grid.size() == 11);
  CHECK(grid.front() == 1e-4);
  CHECK(grid.back() == 1e6);
}

TEST_CASE("table1") {
  const EigenSet set = table1(reference_model(), 25);
  CHECK(std::abs(set.roots.front() - 3.0371) < 0.01);
  CHECK(std::abs(set.roots.back() - 74.8783) < 0.01);
  const EigenSet iso = table1(derive_from_gamma(0.0, 0.5), 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(iso.residual_pct[i] == 0.0);
  std::ostringstream md;
  write_table1_markdown(md, iso);
  CHECK(md.str().find("| 1 | 3.1416 | 0.0000* |") != std::string::npos);
}

TEST_CASE("table2 rows against the print") {
  const auto d = reference_model();
  const EigenSet roots = fixture_eigenset(d);
  const std::array<double, 3> ps = {1e4, 10.0, 1e-3};
  const auto report = table2(d, ps, roots, 25);
  REQUIRE(report.rows.size() == 3);
  // sorted by p
  CHECK(report.rows[0].p == 1e-3);
  CHECK(report.rows[2].p == 1e4);
  CHECK(std::abs(report.rows[1].lhs - 0.14602) <= 1e-5);
  CHECK(std::abs(report.rows[1].rhs - 0.14607) <= 1e-5);
  CHECK(std::abs(report.rows[2].lhs - 0.58911) <= 1e-4);
  // 100·(0.60049 − 0.58911)/0.60049 ≈ 1.9 %
  CHECK(report.rows[2].rel_diff_pct == doctest::Approx(1.9).epsilon(0.05));
  CHECK(std::abs(report.rows[0].lhs - 0.04974) <= 5e-6);
  CHECK(std::abs(report.rows[0].rhs - 0.04974) <= 5e-6);
  CHECK(report.provenance == RootsProvenance::fixture);
}

TEST_CASE("table2 relative discrepancy pattern") {
  const auto d = reference_model();
  const auto grid = default_p_grid();
  const auto report = table2(d, grid, fixture_eigenset(d), 25);
  for (const auto& row : report.rows) {
    if (row.p <= 0.1) CHECK(row.rel_diff_pct < 0.01);
    if (row.p >= 1e5) {
      CHECK(row.rel_diff_pct >= 1.5);
      CHECK(row.rel_diff_pct <= 2.5);
    }
  }
}

TEST_CASE("table3 rows against the print") {
  const auto d = reference_model();
  const auto report = table3(d, default_p_grid(), fixture_eigenset(d), 25);
  REQUIRE(report.rows.size() == 11);
  CHECK(std::abs(report.rows[6].lhs - 7.15260) <= 1e-3);
  CHECK(std::abs(report.rows[6].rhs - 7.60546) <= 1e-3);
  CHECK(report.rows[10].rhs / report.rows[10].lhs == doctest::Approx(18.7).epsilon(0.01));
  CHECK(std::abs(report.rows[0].lhs - 0.96695) <= 5e-6);
  CHECK(std::abs(report.rows[0].rhs - 0.96695) <= 5e-6);
}

TEST_CASE("solver roots move the table values only slightly") {
  const auto d = reference_model();
  const auto grid = default_p_grid();
  const EigenSet solved = find_roots(d, 25);
  const EigenSet fixture = fixture_eigenset(d);
  const auto a = table2(d, grid, fixture, 25);
  const auto b = table2(d, grid, solved, 25);
  const auto c = table3(d, grid, fixture, 25);
  const auto e = table3(d, grid, solved, 25);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(a.rows[i].lhs - b.rows[i].lhs) <= 5e-3 * std::abs(a.rows[i].lhs));
    CHECK(std::abs(c.rows[i].lhs - e.rows[i].lhs) <= 5e-3 * std::abs(c.rows[i].lhs));
  }
}

TEST_CASE("truncation experiment") {
  const auto d = reference_model();
  const EigenSet fixture = fixture_eigenset(d);
  const std::array<std::size_t, 2> printed_n = {20, 25};
  const auto pts = truncation_experiment(d, 1e3, fixture, printed_n);
  CHECK(pts[0].abs_diff > pts[1].abs_diff);

  const std::array<std::size_t, 2> low_n = {5, 25};
  for (const auto& pt : truncation_experiment(d, 1e-4, fixture, low_n)) {
    CHECK(pt.abs_diff < 1e-4);
  }

  const EigenSet solved = find_roots(d, 400);
  const std::array<std::size_t, 3> long_n = {25, 100, 400};
  const auto longer = truncation_experiment(d, 1e3, solved, long_n);
  CHECK(longer[0].abs_diff > longer[1].abs_diff);
  CHECK(longer[1].abs_diff > longer[2].abs_diff);

  const std::array<std::size_t, 1> too_many = {26};
  CHECK_THROWS_AS(truncation_experiment(d, 1e3, fixture, too_many), RangeError);
}

TEST_CASE("formula3 report") {
  const std::array<double, 2> ps = {1.0, 9.8696044010893586};
  const auto report = formula3_report(ps, 10'000, true);
  for (const auto& row : report.rows) CHECK(row.rel_diff_pct < 1e-6);
}

TEST_CASE("report writers are deterministic") {
  const auto d = reference_model();
  const auto grid = default_p_grid();
  auto render = [&] {
    const auto report = table2(d, grid, fixture_eigenset(d), 25);
    std::ostringstream csv, md;
    write_report_csv(csv, report);
    write_report_markdown(md, report);
    return csv.str() + md.str();
  };
  const std::string first = render();
  CHECK(first == render());
  CHECK(first.rfind("p,lhs,rhs,abs_diff,rel_diff_pct\n", 0) == 0);
  CHECK(first.find("| 10^0 | 0.06457 | 0.06457 |") != std::string::npos);
  CHECK(first.find("| 10^6 | 0.58761 |") != std::string::npos);
}

TEST_CASE("p values must be positive") {
  const auto d = reference_model();
  const std::array<double, 1> bad = {-1.0};
  CHECK_THROWS_AS(table2(d, bad, fixture_eigenset(d), 25), DomainError);
}

TEST_CASE("config files") {
  std::istringstream in(
      "# reference constants\n"
      "gamma = -0.03421\n"
      "epsilon=2.64489e-3   # water vapour / LiBr\n"
      "\n"
      "n_terms = 20\n"
      "roots_source = fixture\n");
  const RunConfig cfg = parse_config(in);
  CHECK(*cfg.gamma == -0.03421);
  CHECK(*cfg.epsilon == 2.64489e-3);
  CHECK(*cfg.n_terms == 20);
  CHECK(*cfg.roots_source == "fixture");
  CHECK_FALSE(cfg.w1.has_value());

  const ModelParams params = resolve_model(cfg);
  CHECK(params.w1 == -0.03421);
  CHECK(params.beta_s == 1.0);
  CHECK(params.w2 == 1.0);

  RunConfig flags;
  flags.n_terms = 25;
  flags.epsilon = 0.5;
  const RunConfig merged = merge(cfg, flags);
  CHECK(*merged.n_terms == 25);
  CHECK(*merged.epsilon == 0.5);
  CHECK(*merged.gamma == -0.03421);
}

TEST_CASE("config errors") {
  std::istringstream unknown("zeta = 1\n");
  CHECK_THROWS_AS(parse_config(unknown), ConfigError);
  std::istringstream junk("gamma = 1.0x\n");
  CHECK_THROWS_AS(parse_config(junk), ConfigError);
  std::istringstream no_eq("gamma 1.0\n");
  CHECK_THROWS_AS(parse_config(no_eq), ConfigError);
  std::istringstream bad_count("n_terms = 2.5\n");
  CHECK_THROWS_AS(parse_config(bad_count), ConfigError);

  RunConfig missing;
  missing.gamma = 0.1;
  CHECK_THROWS_AS(resolve_model(missing), ConfigError);
  RunConfig half;
  half.epsilon = 0.1;
  half.w1 = 0.2;
  CHECK_THROWS_AS(resolve_model(half), ConfigError);
  RunConfig clash;
  clash.epsilon = 0.1;
  clash.gamma = 0.3;
  clash.w1 = 0.2;
  clash.beta_s = 1.0;
  CHECK_THROWS_AS(resolve_model(clash), ConfigError);
  RunConfig split;
  split.epsilon = 0.1;
  split.w1 = 0.2;
  split.beta_s = 0.5;
  CHECK(resolve_model(split).w1 == 0.2);
}
