#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "lapmax/graph.hpp"
#include "lapmax/harness.hpp"
#include "lapmax/serialize.hpp"

using namespace lapmax;

TEST_CASE("exhaustive sweep up to n = 5 is clean") {
  const SweepReport report = sweep(3, 5);
  CHECK(report.passed());
  CHECK(report.violations_total == 0);
  CHECK(report.graphs_enumerated == 8 + 64 + 1024);
  CHECK(report.graphs_scanned < report.graphs_enumerated);
  CHECK(report.worst_slack >= -1e-9);
  CHECK(report.certificates > 0);

  REQUIRE(report.equality_census.contains(3));
  CHECK(report.equality_census.at(3).single_edge == 3);
  CHECK(report.equality_census.at(3).balanced == 0);
  CHECK(report.equality_census.at(4).single_edge == 6);
  CHECK(report.equality_census.at(4).balanced == 0);
  CHECK(report.equality_census.at(5).single_edge == 10);
  CHECK(report.equality_census.at(5).balanced == 15);
}

TEST_CASE("exhaustive sweep at n = 6 finds only single-edge equality graphs") {
  const SweepReport report = sweep(6, 6);
  CHECK(report.passed());
  CHECK(report.graphs_enumerated == std::uint64_t{1} << 15);
  CHECK(report.equality_census.at(6).single_edge == 15);  // C(6,2)
  CHECK(report.equality_census.at(6).balanced == 0);
}

TEST_CASE("sweep splits work across threads without changing totals") {
  const SweepReport one = sweep(4, 5, CheckSet{}, 1);
  const SweepReport four = sweep(4, 5, CheckSet{}, 4);
  CHECK(one.graphs_enumerated == four.graphs_enumerated);
  CHECK(one.graphs_scanned == four.graphs_scanned);
  CHECK(one.certificates == four.certificates);
  CHECK(one.violations_total == four.violations_total);
  CHECK(one.worst_slack == four.worst_slack);
  CHECK(one.equality_census.at(5).single_edge == four.equality_census.at(5).single_edge);
  CHECK(one.equality_census.at(5).balanced == four.equality_census.at(5).balanced);
}

TEST_CASE("sweep validates its range") {
  CHECK_THROWS_AS(sweep(2, 5), std::invalid_argument);
  CHECK_THROWS_AS(sweep(5, 4), std::invalid_argument);
}

TEST_CASE("random connected sampling") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 30);
    const Graph g = random_connected_graph(n, rng);
    CHECK(g.vertex_count() == n);
    CHECK(is_connected(g));
  }

  std::mt19937_64 a(4242);
  std::mt19937_64 b(4242);
  for (int trial = 0; trial < 10; ++trial) {
    CHECK(random_connected_graph(10, a) == random_connected_graph(10, b));
  }
}

TEST_CASE("random sweep is deterministic and clean") {
  const SweepReport first = random_sweep(12, 200, 1);
  const SweepReport second = random_sweep(12, 200, 1);
  CHECK(first.passed());
  CHECK(first.graphs_scanned == 200);
  CHECK(first.certificates == second.certificates);
  CHECK(first.worst_slack == second.worst_slack);
  CHECK(first.violations_total == 0);

  const SweepReport other_seed = random_sweep(12, 200, 2);
  CHECK(other_seed.passed());

  // n = 3: the only connected degree->=1 graphs are the labeled paths and
  // the triangle, repeated across trials
  const SweepReport tiny = random_sweep(3, 10, 7);
  CHECK(tiny.passed());
  CHECK(tiny.graphs_scanned == 10);

  CHECK_THROWS_AS(random_sweep(2, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_sweep(33, 5, 1), std::invalid_argument);
}

TEST_CASE("check_graph tallies equality kinds") {
  SweepReport report;
  report.worst_slack = std::numeric_limits<double>::infinity();
  check_graph(glued_complete(4), CheckSet{}, report);
  check_graph(complete_minus_edge(7), CheckSet{}, report);
  check_graph(cycle_graph(5), CheckSet{}, report);
  CHECK(report.violations_total == 0);
  CHECK(report.graphs_scanned == 3);
  CHECK(report.equality_census.at(7).single_edge == 1);
  CHECK(report.equality_census.at(7).balanced == 1);
  // thm1 for all three, thm3 only where d_min <= (n-1)/2 (not cme(7))
  CHECK(report.certificates == 5);
}

TEST_CASE("sweep report serializes with the expected shape") {
  const SweepReport report = sweep(3, 4);
  const json j = sweep_report_to_json(report);
  CHECK(j.at("schema") == "lapmax.sweep/1");
  CHECK(j.at("graphs_enumerated").get<std::uint64_t>() == 72);
  CHECK(j.at("violations").is_array());
  CHECK(j.at("violations").empty());
  CHECK(j.at("equality_census").contains("3"));
  CHECK(j.at("equality_census").at("4").at("total").get<std::uint64_t>() == 6);
  CHECK(j.at("worst_slack").get<double>() >= -1e-9);
  CHECK(j.at("checks").at("thm2").get<bool>());
}
