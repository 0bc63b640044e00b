#include <doctest.h>

#include "sdepth/scan.hpp"

using namespace sdepth;

TEST_CASE("squarefree ideal enumeration is deduplicated") {
  CHECK(all_squarefree_ideals(1).size() == 2);   // 0 and (x1)
  CHECK(all_squarefree_ideals(2).size() == 5);
  CHECK(all_squarefree_ideals(3).size() == 19);  // antichains of nonempty subsets
}

TEST_CASE("exhaustive squarefree scan is clean in two variables") {
  ScanConfig cfg;
  cfg.mode = ScanConfig::Mode::exhaustive_squarefree;
  cfg.n_max = 2;
  const ScanReport report = run_scan(cfg);
  CHECK(report.instances == 7);  // 2 + 5 ideals, embedded
  CHECK(report.ok());
  CHECK(report.checks.at("sdepth-identity") == report.instances);
  CHECK(report.checks.at("depth-identity") == report.instances);
  CHECK(report.checks.at("pretty-clean-biconditional") == report.instances);
}

TEST_CASE("exhaustive squarefree scan in four variables") {
  // includes the three disjoint-matching ideals, the only squarefree
  // non-pretty-clean ideals in <= 4 variables
  ScanConfig cfg;
  cfg.mode = ScanConfig::Mode::exhaustive_squarefree;
  cfg.n_max = 4;
  const ScanReport report = run_scan(cfg);
  CHECK(report.instances == 193);
  CHECK(report.ok());
  CHECK(report.checks.at("pretty-clean-biconditional") == 193);
  CHECK(report.checks.at("descend-pretty-clean") == 190);
}

TEST_CASE("seeded random scan is clean and deterministic") {
  ScanConfig cfg;
  cfg.mode = ScanConfig::Mode::random_box;
  cfg.n_max = 2;
  cfg.exponent_max = 2;
  cfg.sample_count = 25;
  cfg.seed = 42;
  const ScanReport a = run_scan(cfg);
  CHECK(a.instances == 25);
  CHECK(a.ok());
  const ScanReport b = run_scan(cfg);
  CHECK(a.failures.size() == b.failures.size());
  CHECK(a.checks == b.checks);
  CHECK(a.skipped == b.skipped);
}

TEST_CASE("scan config validation") {
  ScanConfig cfg;
  cfg.n_max = 0;
  CHECK_THROWS_AS(run_scan(cfg), Error);
}
