#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lapmax/fraction.hpp"
#include "lapmax/graph.hpp"
#include "lapmax/spectral.hpp"

namespace lapmax {

enum class EqualityKind {
  kSingleEdgeComplement,
  kBalancedBipartiteComplement,
  kNotEquality,
};

/// Outcome of the purely combinatorial equality classification: the largest
/// eigenvalue equals (n+1)/(n-1) exactly when the complement graph, after
/// removing isolated vertices, is a single edge or a balanced complete
/// bipartite graph on n-1 vertices.
struct RigidityVerdict {
  EqualityKind kind = EqualityKind::kNotEquality;
  /// Single-edge case: the unique non-adjacent pair, original labels.
  std::optional<std::pair<int, int>> pair;
  /// Balanced case: the two parts, each of size (n-1)/2, original labels.
  std::vector<int> part_v;
  std::vector<int> part_w;
  /// Balanced case: the vertex adjacent to everything.
  std::optional<int> center;
  /// Vertices removed from the complement before classification.
  std::vector<int> removed_isolated;
};

/// Exact combinatorial classifier; no floating point involved. Throws
/// IsolatedVertexError when g itself has a degree-0 vertex. When both shapes
/// match (n == 3), the single-edge form wins.
RigidityVerdict classify_equality(const Graph& g);

/// Closed-form eigenfunctions for an equality graph:
///   single edge (v,w):  (1, 1_v - 1_w), ((n+1)/(n-1), -2 + (n+1)(1_v + 1_w)),
///     then a basis of the complement with common eigenvalue n/(n-1);
///   balanced parts:     (2/(n-1), 1_{P_v} - 1_{P_w}),
///     then a basis of the complement with common eigenvalue (n+1)/(n-1).
/// The completion is a deterministic orthogonalization of coordinate
/// indicators in the degree inner product. Throws VerdictMismatchError when
/// the verdict does not describe g.
std::vector<std::pair<Fraction, VertexFunction>> equality_eigenbasis(const Graph& g,
                                                                     const RigidityVerdict& v);

/// All (n-1)^2/4 cross-pair eigenfunctions of the largest eigenvalue for a
/// balanced-complement graph with n > 3: 1 at one vertex per part, -1 at
/// their single joint neighbor, 0 elsewhere. For n == 5 the alternating
/// +1/-1 pattern over the two triangles (0 at the center) is appended.
std::vector<VertexFunction> remark_eigenfunctions(const Graph& g);

/// One single-edge addition to the glued-complete base graph.
struct EdgeAddition {
  int u = 0;
  int v = 0;
  double lambda_max = 0.0;
};

/// Demonstration that the largest eigenvalue can drop when an edge is
/// removed: the glued-complete graph attains (n+1)/(n-1), and every
/// single-edge addition pushes the largest eigenvalue strictly above it.
struct EdgeRemovalReport {
  int clique_size = 0;
  int n = 0;
  Fraction target{0};      // (n+1)/(n-1)
  double lambda_base = 0;  // largest eigenvalue of glued_complete(k)
  std::vector<EdgeAddition> additions;
  bool all_exceed = false;  // every addition has lambda_max > target + 1e-9
};

EdgeRemovalReport edge_removal_demo(int clique_size);

}  // namespace lapmax
