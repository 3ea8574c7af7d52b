#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lapmax {

/// Finite simple undirected graph on vertices {0..n-1}.
///
/// Adjacency rows are single 64-bit words, which caps the supported order at
/// 64 vertices and makes neighborhood queries O(1) word operations. Graphs
/// are treated as immutable once built; all analysis functions take them by
/// const reference and are safe to call concurrently.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph from an explicit edge list. Duplicate edges and both
  /// orientations collapse to one undirected edge. Throws on loops, vertex
  /// indices outside [0, n), n < 1, or n > 64.
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }

  int vertex_count() const { return n_; }
  int edge_count() const;
  int degree(int v) const;
  int min_degree() const;
  int max_degree() const;

  /// Bitmask of N(v); bit w set iff v ~ w.
  std::uint64_t neighbor_mask(int v) const { return rows_[v]; }
  std::vector<int> neighbors(int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Connected components as disjoint vertex sets covering {0..n-1}, ordered by
/// their smallest contained vertex; vertices within a set are ascending.
struct ComponentPartition {
  std::vector<std::vector<int>> components;
};

struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;
};

/// Induced subgraph together with the map from new indices to original ones.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_map;  // vertex_map[new] == old
};

Graph complement(const Graph& g);

/// BFS distances from v; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int v);

/// Vertices at combinatorial distance exactly k from v, ascending.
/// k == 0 gives {v}; empty when no vertex is at that distance.
std::vector<int> neighborhood_at_distance(const Graph& g, int v, int k);

ComponentPartition connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

/// The complete bipartition (P, Q) if every cross pair is an edge and no
/// intra-part pair is; nothing otherwise. P is the part containing vertex 0.
std::optional<Bipartition> is_complete_bipartite(const Graph& g);

/// True iff some connected component is 2-colorable. With all degrees >= 1
/// this is exactly the condition for the largest eigenvalue to reach 2.
bool has_bipartite_component(const Graph& g);

InducedSubgraph remove_isolated_vertices(const Graph& g);
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// ---- generators (canonical labelings documented per family) ----

Graph complete_graph(int n);
/// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite_graph(int a, int b);
/// K_n with the edge (0,1) removed; n >= 3.
Graph complete_minus_edge(int n);
/// Two copies of K_k sharing vertex 0 (n = 2k-1); the first clique is
/// {0..k-1}, the second {0, k..2k-2}; k >= 2.
Graph glued_complete(int k);
/// Edges (i, i+1 mod n); n >= 3.
Graph cycle_graph(int n);
/// Edges (i, i+1); n >= 1.
Graph path_graph(int n);
/// Center 0, leaves 1..n-1; n >= 2.
Graph star_graph(int n);

// ---- serialization ----

/// Parses the standard graph6 encoding (an optional ">>graph6<<" header is
/// tolerated). Throws ParseError on malformed input or n outside [1, 64].
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Plain text edge list: first line "n", then one "u v" line per edge.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Auto-detects edge list (first non-space character is a digit) vs graph6.
Graph parse_graph_auto(std::string_view text);

// ---- labeled enumeration ----

/// Number of vertex pairs C(n,2).
int pair_count(int n);

/// Index of pair (i,j), i < j, in column-major order (the graph6 bit order):
/// (0,1), (0,2), (1,2), (0,3), ...
int pair_index(int i, int j);

/// 2^C(n,2); requires C(n,2) <= 63 (n <= 11).
std::uint64_t labeled_graph_count(int n);

Graph graph_from_bitmask(int n, std::uint64_t mask);
std::uint64_t graph_to_bitmask(const Graph& g);

/// Visits every labeled graph on n vertices with bitmask in [begin, end),
/// in increasing bitmask order. Ranges partition cleanly for parallel sweeps.
template <typename Visit>
void enumerate_labeled_graphs(int n, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    visit(graph_from_bitmask(n, mask));
  }
}

template <typename Visit>
void enumerate_labeled_graphs(int n, Visit&& visit) {
  enumerate_labeled_graphs(n, 0, labeled_graph_count(n), static_cast<Visit&&>(visit));
}

}  // namespace lapmax
