#include "lapmax/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "lapmax/errors.hpp"

namespace lapmax {

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
  if (n < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
  if (n > kMaxVertices)
    throw std::invalid_argument("Graph: vertex count " + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxVertices));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex index " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n_) + ")");
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
  rows_[u] |= std::uint64_t{1} << v;
  rows_[v] |= std::uint64_t{1} << u;
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto row : rows_) twice += std::popcount(row);
  return twice / 2;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(rows_[v]);
}

int Graph::min_degree() const {
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, std::popcount(rows_[v]));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, std::popcount(rows_[v]));
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (std::uint64_t m = rows_[v]; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph c(n);
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      if (!g.adjacent(v, w)) c.add_edge(v, w);
    }
  }
  return c;
}

std::vector<int> bfs_distances(const Graph& g, int v) {
  const int n = g.vertex_count();
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  dist[v] = 0;
  std::vector<int> frontier{v};
  int level = 0;
  while (!frontier.empty()) {
    ++level;
    std::vector<int> next;
    for (const int u : frontier) {
      for (std::uint64_t m = g.neighbor_mask(u); m != 0; m &= m - 1) {
        const int w = std::countr_zero(m);
        if (dist[w] < 0) {
          dist[w] = level;
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

std::vector<int> neighborhood_at_distance(const Graph& g, int v, int k) {
  if (k < 0) throw std::invalid_argument("distance must be >= 0");
  const auto dist = bfs_distances(g, v);
  std::vector<int> out;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (dist[w] == k) out.push_back(w);
  }
  return out;
}

ComponentPartition connected_components(const Graph& g) {
  const int n = g.vertex_count();
  ComponentPartition parts;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    const auto dist = bfs_distances(g, v);
    std::vector<int> comp;
    for (int w = 0; w < n; ++w) {
      if (dist[w] >= 0) {
        comp.push_back(w);
        seen[w] = true;
      }
    }
    parts.components.push_back(std::move(comp));
  }
  return parts;
}

bool is_connected(const Graph& g) {
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_complete(const Graph& g) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != n - 1) return false;
  }
  return true;
}

std::optional<Bipartition> is_complete_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2 || !is_connected(g)) return std::nullopt;
  // 2-color by BFS parity from vertex 0.
  const auto dist = bfs_distances(g, 0);
  Bipartition parts;
  for (int v = 0; v < n; ++v) {
    (dist[v] % 2 == 0 ? parts.left : parts.right).push_back(v);
  }
  if (parts.left.empty() || parts.right.empty()) return std::nullopt;
  for (const int v : parts.left) {
    for (const int w : parts.left) {
      if (v < w && g.adjacent(v, w)) return std::nullopt;
    }
  }
  for (const int v : parts.right) {
    for (const int w : parts.right) {
      if (v < w && g.adjacent(v, w)) return std::nullopt;
    }
  }
  for (const int v : parts.left) {
    for (const int w : parts.right) {
      if (!g.adjacent(v, w)) return std::nullopt;
    }
  }
  return parts;
}

bool has_bipartite_component(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::vector<int> stack{start};
    bool odd_cycle = false;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (std::uint64_t m = g.neighbor_mask(u); m != 0; m &= m - 1) {
        const int w = std::countr_zero(m);
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          odd_cycle = true;
        }
      }
    }
    if (!odd_cycle) return true;
  }
  return false;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  InducedSubgraph out;
  out.vertex_map = vertices;
  out.graph = Graph(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) {
        out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return out;
}

InducedSubgraph remove_isolated_vertices(const Graph& g) {
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) keep.push_back(v);
  }
  if (keep.empty()) {
    // Degenerate: every vertex isolated. Represent the result as an empty
    // mapping with a single-vertex placeholder graph never used downstream.
    InducedSubgraph out;
    out.graph = Graph(1);
    out.vertex_map.clear();
    return out;
  }
  return induced_subgraph(g, keep);
}

// ---- generators ----

Graph complete_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) g.add_edge(v, w);
  }
  return g;
}

Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite_graph: parts must be >= 1");
  Graph g(a + b);
  for (int v = 0; v < a; ++v) {
    for (int w = 0; w < b; ++w) g.add_edge(v, a + w);
  }
  return g;
}

Graph complete_minus_edge(int n) {
  if (n < 3) throw std::invalid_argument("complete_minus_edge: need n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      if (!(v == 0 && w == 1)) g.add_edge(v, w);
    }
  }
  return g;
}

Graph glued_complete(int k) {
  if (k < 2) throw std::invalid_argument("glued_complete: need clique size >= 2");
  const int n = 2 * k - 1;
  Graph g(n);
  for (int v = 0; v < k; ++v) {
    for (int w = v + 1; w < k; ++w) g.add_edge(v, w);
  }
  for (int v = k; v < n; ++v) {
    g.add_edge(0, v);
    for (int w = v + 1; w < n; ++w) g.add_edge(v, w);
  }
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int n) {
  if (n < 2) throw std::invalid_argument("star_graph: need n >= 2");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

// ---- graph6 ----

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

int g6_byte(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6: truncated input");
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kG6Lo || c > kG6Hi) {
    throw ParseError("graph6: byte " + std::to_string(pos) + " out of printable range");
  }
  return c - kG6Lo;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::string_view s = trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
  if (s.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  long n = 0;
  if (static_cast<unsigned char>(s[0]) == kG6Hi) {
    // '~' introduces the 18-bit form; '~~' (63-bit) is far beyond our range.
    if (s.size() > 1 && static_cast<unsigned char>(s[1]) == kG6Hi)
      throw ParseError("graph6: vertex count exceeds supported range");
    ++pos;
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | g6_byte(s, pos++);
  } else {
    n = g6_byte(s, pos++);
  }
  if (n < 1 || n > Graph::kMaxVertices) {
    throw ParseError("graph6: vertex count " + std::to_string(n) + " outside supported [1, 64]");
  }

  Graph g(static_cast<int>(n));
  int bit = 0;
  int value = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bit % 6 == 0) value = g6_byte(s, pos++);
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
      ++bit;
    }
  }
  if (pos != s.size()) throw ParseError("graph6: trailing characters after payload");
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Lo));
  } else {
    out.push_back(static_cast<char>(kG6Hi));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Lo));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Lo));
    out.push_back(static_cast<char>((n & 0x3f) + kG6Lo));
  }
  int bit = 0;
  int value = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bit % 6 == 0) {
        out.push_back(static_cast<char>(value + kG6Lo));
        value = 0;
      }
    }
  }
  if (bit % 6 != 0) {
    value <<= 6 - bit % 6;
    out.push_back(static_cast<char>(value + kG6Lo));
  }
  return out;
}

// ---- edge list ----

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n)) continue;  // skip leading blank lines
      if (n < 1 || n > Graph::kMaxVertices)
        throw ParseError("edge list: vertex count " + std::to_string(n) +
                         " outside supported [1, 64]");
      continue;
    }
    int u = 0, v = 0;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v)) throw ParseError("edge list: expected 'u v' on line: " + line);
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError("edge list: missing vertex count line");
  try {
    return Graph::from_edge_list(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int w = v + 1; w < g.vertex_count(); ++w) {
      if (g.adjacent(v, w)) out << v << ' ' << w << '\n';
    }
  }
  return out.str();
}

Graph parse_graph_auto(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty graph input");
  if (std::isdigit(static_cast<unsigned char>(s.front()))) return parse_edge_list(s);
  return parse_graph6(s);
}

// ---- enumeration ----

int pair_count(int n) { return n * (n - 1) / 2; }

int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

std::uint64_t labeled_graph_count(int n) {
  const int bits = pair_count(n);
  if (n < 1 || bits > 63)
    throw std::invalid_argument("labeled_graph_count: C(n,2) must fit in 63 bits");
  return std::uint64_t{1} << bits;
}

Graph graph_from_bitmask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((mask >> bit) & 1u) g.add_edge(i, j);
      ++bit;
    }
  }
  if (bit < 64 && (mask >> bit) != 0)
    throw std::invalid_argument("graph_from_bitmask: mask has bits beyond C(n,2)");
  return g;
}

std::uint64_t graph_to_bitmask(const Graph& g) {
  std::uint64_t mask = 0;
  int bit = 0;
  for (int j = 1; j < g.vertex_count(); ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.adjacent(i, j)) mask |= std::uint64_t{1} << bit;
      ++bit;
    }
  }
  return mask;
}

}  // namespace lapmax
