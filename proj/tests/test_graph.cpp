#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "lapmax/errors.hpp"
#include "lapmax/graph.hpp"
#include "oracles.hpp"

using namespace lapmax;

TEST_CASE("from_edge_list builds the stated graphs") {
  const Graph k3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(is_complete(k3));
  CHECK(k3.edge_count() == 3);

  const Graph p2 = Graph::from_edge_list(2, {{0, 1}});
  CHECK(p2.edge_count() == 1);
  CHECK(p2.adjacent(0, 1));

  const Graph c5 = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

  // duplicates and orientation collapse
  const Graph dup = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.edge_count() == 1);
}

TEST_CASE("from_edge_list rejects bad input") {
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{-1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
}

TEST_CASE("graph6 encodes and parses the reference strings") {
  CHECK(to_graph6(Graph::from_edge_list(2, {{0, 1}})) == "A_");
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(to_graph6(glued_complete(4)) == "F~aKW");
  CHECK(to_graph6(complete_minus_edge(7)) == "F^~~w");
  CHECK(to_graph6(cycle_graph(5)) == "Dhc");

  const Graph p2 = parse_graph6("A_");
  CHECK(p2.vertex_count() == 2);
  CHECK(p2.adjacent(0, 1));

  CHECK(parse_graph6(">>graph6<<Bw") == complete_graph(3));
  CHECK(parse_graph6("F~aKW\n") == glued_complete(4));
}

TEST_CASE("graph6 round-trip is the identity on all n=4 graphs") {
  enumerate_labeled_graphs(4, [](const Graph& g) { CHECK(parse_graph6(to_graph6(g)) == g); });
}

TEST_CASE("graph6 round-trip on random graphs up to the 64-vertex cap") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 64);
    Graph g(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng() & 1u) g.add_edge(i, j);
      }
    }
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("F~aK"), ParseError);      // truncated payload
  CHECK_THROWS_AS(parse_graph6("F~aKW!"), ParseError);    // trailing garbage
  CHECK_THROWS_AS(parse_graph6("\x1f"), ParseError);      // header byte below range
  CHECK_THROWS_AS(parse_graph6("~~~~~~~~"), ParseError);  // oversized order form
  CHECK_THROWS_AS(parse_graph6("?"), ParseError);         // n = 0
  CHECK_THROWS_AS(parse_graph6(to_graph6(complete_graph(64)) + "w"), ParseError);
}

TEST_CASE("graph6 long order form at the 64-vertex cap") {
  // n >= 63 switches to the multi-byte vertex count
  for (const int n : {63, 64}) {
    Graph g = cycle_graph(n);
    g.add_edge(0, n / 2);
    const std::string text = to_graph6(g);
    CHECK(text.front() == '~');
    CHECK(parse_graph6(text) == g);
  }
  // 100 vertices encodes fine elsewhere but is beyond this library's cap
  const std::string too_big = std::string("~") + "?Ac" + std::string(825, '?');
  CHECK_THROWS_AS(parse_graph6(too_big), ParseError);
}

TEST_CASE("edge list parses and round-trips") {
  const Graph c5 = parse_edge_list("5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  CHECK(c5 == cycle_graph(5));
  CHECK(parse_edge_list(to_edge_list(c5)) == c5);
  CHECK(parse_graph_auto("5\n0 1\n1 2\n2 3\n3 4\n4 0\n") == c5);
  CHECK(parse_graph_auto("Dhc") == c5);
  CHECK_THROWS_AS(parse_edge_list("3\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2\n0 2\n"), ParseError);
}

TEST_CASE("complement of reference graphs") {
  CHECK(complement(complete_graph(5)).edge_count() == 0);

  // two K_4 sharing a vertex: complement is K_{3,3} plus the shared vertex
  // isolated
  const Graph comp = complement(glued_complete(4));
  CHECK(comp.degree(0) == 0);
  const auto stripped = remove_isolated_vertices(comp);
  CHECK(stripped.vertex_map == std::vector<int>{1, 2, 3, 4, 5, 6});
  const auto parts = is_complete_bipartite(stripped.graph);
  REQUIRE(parts.has_value());
  CHECK(parts->left.size() == 3);
  CHECK(parts->right.size() == 3);

  // complete minus edge: complement is that single edge plus isolated rest
  const Graph comp2 = complement(complete_minus_edge(7));
  CHECK(comp2.edge_count() == 1);
  CHECK(comp2.adjacent(0, 1));
}

TEST_CASE("complement is an involution") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 20);
    Graph g(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng() & 1u) g.add_edge(i, j);
      }
    }
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("neighborhood_at_distance") {
  const Graph c5 = cycle_graph(5);
  CHECK(neighborhood_at_distance(c5, 0, 2) == std::vector<int>{2, 3});
  CHECK(neighborhood_at_distance(c5, 0, 0) == std::vector<int>{0});
  CHECK(neighborhood_at_distance(c5, 0, 1) == std::vector<int>{1, 4});

  CHECK(neighborhood_at_distance(complete_graph(4), 0, 2).empty());

  const Graph s5 = star_graph(5);
  CHECK(neighborhood_at_distance(s5, 1, 2) == std::vector<int>{2, 3, 4});
}

TEST_CASE("distance rings partition the component") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 12);
    Graph g(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng() % 3 == 0) g.add_edge(i, j);
      }
    }
    const int v = static_cast<int>(rng() % n);
    const auto dist = bfs_distances(g, v);
    std::set<int> collected;
    for (int k = 0; k <= n; ++k) {
      for (const int w : neighborhood_at_distance(g, v, k)) {
        CHECK(dist[w] == k);
        CHECK(collected.insert(w).second);
      }
    }
    for (int w = 0; w < n; ++w) {
      CHECK((dist[w] >= 0) == collected.contains(w));
    }
  }
}

TEST_CASE("connected components") {
  CHECK(connected_components(complete_graph(5)).components ==
        std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});

  Graph two(6);
  for (const auto& [u, v] :
       std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}) {
    two.add_edge(u, v);
  }
  const auto parts = connected_components(two);
  CHECK(parts.components == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}});
  CHECK(!is_connected(two));

  Graph lone(4);
  lone.add_edge(0, 1);
  lone.add_edge(1, 2);
  const auto parts2 = connected_components(lone);
  REQUIRE(parts2.components.size() == 2);
  CHECK(parts2.components[1] == std::vector<int>{3});
}

TEST_CASE("is_complete_bipartite") {
  const auto k33 = is_complete_bipartite(complete_bipartite_graph(3, 3));
  REQUIRE(k33.has_value());
  CHECK(k33->left == std::vector<int>{0, 1, 2});
  CHECK(k33->right == std::vector<int>{3, 4, 5});

  CHECK(!is_complete_bipartite(cycle_graph(5)).has_value());
  CHECK(is_complete_bipartite(cycle_graph(4)).has_value());
  CHECK(!is_complete_bipartite(path_graph(4)).has_value());

  const auto p2 = is_complete_bipartite(Graph::from_edge_list(2, {{0, 1}}));
  REQUIRE(p2.has_value());
  CHECK(p2->left == std::vector<int>{0});
  CHECK(p2->right == std::vector<int>{1});

  CHECK(!is_complete_bipartite(complete_graph(4)).has_value());
}

TEST_CASE("generators have the documented shapes") {
  const Graph glued = glued_complete(4);
  CHECK(glued.vertex_count() == 7);
  CHECK(glued.degree(0) == 6);
  for (int v = 1; v < 7; ++v) CHECK(glued.degree(v) == 3);

  const Graph cme = complete_minus_edge(7);
  CHECK(cme.degree(0) == 5);
  CHECK(cme.degree(1) == 5);
  for (int v = 2; v < 7; ++v) CHECK(cme.degree(v) == 6);
  CHECK(!cme.adjacent(0, 1));

  CHECK(complete_bipartite_graph(1, 1) == Graph::from_edge_list(2, {{0, 1}}));
  CHECK(glued_complete(2) == star_graph(3));

  CHECK(star_graph(5).degree(0) == 4);
  CHECK(path_graph(1).edge_count() == 0);

  CHECK_THROWS_AS(glued_complete(1), std::invalid_argument);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(star_graph(1), std::invalid_argument);
  CHECK_THROWS_AS(complete_minus_edge(2), std::invalid_argument);
  CHECK_THROWS_AS(complete_bipartite_graph(0, 2), std::invalid_argument);
}

TEST_CASE("degree sum equals twice the edge count") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 30);
    Graph g(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng() & 1u) g.add_edge(i, j);
      }
    }
    int sum = 0;
    for (int v = 0; v < n; ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.edge_count());
  }
}

TEST_CASE("enumeration counts and injectivity") {
  std::uint64_t count = 0;
  enumerate_labeled_graphs(3, [&](const Graph&) { ++count; });
  CHECK(count == 8);

  CHECK(labeled_graph_count(7) == std::uint64_t{1} << 21);

  std::uint64_t connected = 0;
  std::set<std::uint64_t> masks;
  enumerate_labeled_graphs(4, [&](const Graph& g) {
    CHECK(masks.insert(graph_to_bitmask(g)).second);
    if (is_connected(g)) ++connected;
  });
  CHECK(masks.size() == 64);
  CHECK(connected == oracle::connected_count(4));
  CHECK(connected == 38);
  CHECK(oracle::connected_count(3) == 4);
}

TEST_CASE("bitmask round-trip and range splitting") {
  const std::uint64_t total = labeled_graph_count(4);
  std::uint64_t seen = 0;
  enumerate_labeled_graphs(4, 0, total / 2, [&](const Graph& g) {
    CHECK(graph_to_bitmask(g) == seen);
    ++seen;
  });
  enumerate_labeled_graphs(4, total / 2, total, [&](const Graph& g) {
    CHECK(graph_to_bitmask(g) == seen);
    ++seen;
  });
  CHECK(seen == total);
  CHECK_THROWS_AS(graph_from_bitmask(3, 0xff), std::invalid_argument);
}
