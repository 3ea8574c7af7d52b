#include "lapmax/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lapmax/bounds.hpp"
#include "lapmax/errors.hpp"

namespace lapmax {

namespace {

void require_degrees(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) throw IsolatedVertexError(v);
  }
}

constexpr double kEigenTol = 1e-10;

}  // namespace

RigidityVerdict classify_equality(const Graph& g) {
  require_degrees(g);
  const int n = g.vertex_count();
  const Graph comp = complement(g);
  const InducedSubgraph core = remove_isolated_vertices(comp);

  RigidityVerdict verdict;
  for (int v = 0; v < n; ++v) {
    if (comp.degree(v) == 0) verdict.removed_isolated.push_back(v);
  }

  if (core.vertex_map.empty()) return verdict;  // complete graph

  if (core.vertex_map.size() == 2 && core.graph.edge_count() == 1) {
    verdict.kind = EqualityKind::kSingleEdgeComplement;
    verdict.pair = {{core.vertex_map[0], core.vertex_map[1]}};
    return verdict;
  }

  if (n % 2 == 1 && static_cast<int>(core.vertex_map.size()) == n - 1) {
    if (const auto parts = is_complete_bipartite(core.graph)) {
      const int half = (n - 1) / 2;
      if (static_cast<int>(parts->left.size()) == half &&
          static_cast<int>(parts->right.size()) == half) {
        verdict.kind = EqualityKind::kBalancedBipartiteComplement;
        for (const int v : parts->left) verdict.part_v.push_back(core.vertex_map[v]);
        for (const int v : parts->right) verdict.part_w.push_back(core.vertex_map[v]);
        verdict.center = verdict.removed_isolated.front();
        return verdict;
      }
    }
  }

  verdict.kind = EqualityKind::kNotEquality;
  return verdict;
}

namespace {

bool same_verdict(const RigidityVerdict& a, const RigidityVerdict& b) {
  return a.kind == b.kind && a.pair == b.pair && a.part_v == b.part_v && a.part_w == b.part_w &&
         a.center == b.center;
}

/// Deterministic completion: orthogonalize coordinate indicators against the
/// given functions (and previously accepted ones) in the degree inner
/// product, keeping the nonzero results at unit degree-norm.
std::vector<VertexFunction> orthogonal_completion(const Graph& g,
                                                  std::vector<VertexFunction> base, int want) {
  const int n = g.vertex_count();
  for (auto& b : base) {
    const double norm = std::sqrt(degree_inner_product(g, b, b));
    for (double& x : b) x /= norm;
  }
  std::vector<VertexFunction> accepted;
  for (int seed = 0; seed < n && static_cast<int>(accepted.size()) < want; ++seed) {
    VertexFunction f(static_cast<std::size_t>(n), 0.0);
    f[seed] = 1.0;
    for (const auto& b : base) {
      const double coef = degree_inner_product(g, f, b);
      for (int x = 0; x < n; ++x) f[x] -= coef * b[x];
    }
    const double norm2 = degree_inner_product(g, f, f);
    if (norm2 <= 1e-12) continue;
    const double norm = std::sqrt(norm2);
    for (double& x : f) x /= norm;
    base.push_back(f);
    accepted.push_back(std::move(f));
  }
  return accepted;
}

}  // namespace

std::vector<std::pair<Fraction, VertexFunction>> equality_eigenbasis(const Graph& g,
                                                                     const RigidityVerdict& v) {
  if (v.kind == EqualityKind::kNotEquality)
    throw VerdictMismatchError("eigenbasis requested for a non-equality verdict");
  const RigidityVerdict actual = classify_equality(g);
  if (!same_verdict(actual, v)) throw VerdictMismatchError("verdict does not describe this graph");

  const int n = g.vertex_count();
  std::vector<std::pair<Fraction, VertexFunction>> basis;

  if (v.kind == EqualityKind::kSingleEdgeComplement) {
    const auto [a, b] = *v.pair;
    VertexFunction phi(static_cast<std::size_t>(n), 0.0);
    phi[a] = 1.0;
    phi[b] = -1.0;
    VertexFunction psi(static_cast<std::size_t>(n), -2.0);
    psi[a] += n + 1;
    psi[b] += n + 1;
    basis.emplace_back(Fraction{1}, phi);
    basis.emplace_back(Fraction{n + 1, n - 1}, psi);

    const Fraction rest{n, n - 1};
    VertexFunction ones(static_cast<std::size_t>(n), 1.0);
    for (auto& f : orthogonal_completion(g, {ones, phi, psi}, n - 3)) {
      basis.emplace_back(rest, std::move(f));
    }
  } else {
    VertexFunction phi(static_cast<std::size_t>(n), 0.0);
    for (const int x : v.part_v) phi[x] = 1.0;
    for (const int x : v.part_w) phi[x] = -1.0;
    basis.emplace_back(Fraction{2, n - 1}, phi);

    const Fraction rest{n + 1, n - 1};
    VertexFunction ones(static_cast<std::size_t>(n), 1.0);
    for (auto& f : orthogonal_completion(g, {ones, phi}, n - 2)) {
      basis.emplace_back(rest, std::move(f));
    }
  }

  for (const auto& [lambda, f] : basis) {
    if (!verify_eigenpair(g, lambda.value(), f, kEigenTol))
      throw Error("internal: constructed eigenfunction failed verification");
  }
  return basis;
}

std::vector<VertexFunction> remark_eigenfunctions(const Graph& g) {
  const RigidityVerdict verdict = classify_equality(g);
  if (verdict.kind != EqualityKind::kBalancedBipartiteComplement)
    throw VerdictMismatchError("remark eigenfunctions exist only for the balanced complement case");
  const int n = g.vertex_count();
  if (n <= 3) throw VerdictMismatchError("remark eigenfunctions need n > 3");

  const int z = *verdict.center;
  std::vector<VertexFunction> out;
  for (const int vp : verdict.part_v) {
    for (const int wp : verdict.part_w) {
      VertexFunction f(static_cast<std::size_t>(n), 0.0);
      f[vp] = 1.0;
      f[wp] = 1.0;
      f[z] = -1.0;
      out.push_back(std::move(f));
    }
  }
  if (n == 5) {
    // Two triangles sharing the center: alternate +1/-1 over the two other
    // vertices of each triangle, 0 at the shared vertex.
    VertexFunction f(static_cast<std::size_t>(n), 0.0);
    f[verdict.part_v[0]] = 1.0;
    f[verdict.part_v[1]] = -1.0;
    f[verdict.part_w[0]] = 1.0;
    f[verdict.part_w[1]] = -1.0;
    out.push_back(std::move(f));
  }
  return out;
}

EdgeRemovalReport edge_removal_demo(int clique_size) {
  if (clique_size < 3) throw std::invalid_argument("edge_removal_demo: need clique size >= 3");
  const Graph base = glued_complete(clique_size);
  const int n = base.vertex_count();

  EdgeRemovalReport report;
  report.clique_size = clique_size;
  report.n = n;
  report.target = thm1_lower_bound(n);
  report.lambda_base = spectrum(base).lambda_max();
  report.all_exceed = true;

  const double threshold = report.target.value() + 1e-9;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (base.adjacent(u, v)) continue;
      Graph extended = base;
      extended.add_edge(u, v);
      EdgeAddition add;
      add.u = u;
      add.v = v;
      add.lambda_max = spectrum(extended).lambda_max();
      if (add.lambda_max <= threshold) report.all_exceed = false;
      report.additions.push_back(add);
    }
  }
  return report;
}

}  // namespace lapmax
