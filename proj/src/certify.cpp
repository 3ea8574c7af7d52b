#include "lapmax/certify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
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

std::vector<int> all_vertices(int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out[v] = v;
  return out;
}

/// Witness skeleton shared by both theorems: -1 on the common neighborhood,
/// weight * A / d at the pair vertices.
VertexFunction pair_witness(const Graph& g, int v, int w, double weight) {
  if (g.adjacent(v, w)) throw AdjacentPairError(v, w);
  const std::uint64_t common = g.neighbor_mask(v) & g.neighbor_mask(w);
  if (common == 0) throw EmptyCommonNeighborhoodError(v, w);
  const int a = std::popcount(common);

  VertexFunction f(static_cast<std::size_t>(g.vertex_count()), 0.0);
  for (std::uint64_t m = common; m != 0; m &= m - 1) f[std::countr_zero(m)] = -1.0;
  f[v] = weight * a / g.degree(v);
  f[w] = weight * a / g.degree(w);
  return f;
}

Certificate make_pair_certificate(const Graph& g, Method method, int v, int w,
                                  const VertexFunction& witness, double bound,
                                  std::optional<Fraction> bound_exact, std::optional<double> eta,
                                  std::vector<int> component) {
  Certificate cert;
  cert.method = method;
  cert.bound = bound;
  cert.bound_exact = std::move(bound_exact);
  cert.witness = witness;
  cert.pair = {{v, w}};
  cert.common_neighbors = std::popcount(g.neighbor_mask(v) & g.neighbor_mask(w));
  cert.mean_degree = 0.5 * (g.degree(v) + g.degree(w));
  cert.eta = eta;
  cert.component = std::move(component);
  cert.rayleigh = rayleigh_quotient(g, witness);
  return cert;
}

/// 1_a - 1_b on two vertices of a complete component: an exact eigenfunction
/// of the full graph with eigenvalue k/(k-1) for component order k.
VertexFunction indicator_difference(int n, int a, int b) {
  VertexFunction f(static_cast<std::size_t>(n), 0.0);
  f[a] = 1.0;
  f[b] = -1.0;
  return f;
}

}  // namespace

std::pair<int, int> select_witness_pair(const Graph& g, Method mode) {
  require_degrees(g);
  const int n = g.vertex_count();
  if (is_complete(g)) throw GraphCompleteError();
  if (!is_connected(g)) throw DisconnectedError();

  int v = -1;
  if (mode == Method::kThm3) {
    const int d_min = g.min_degree();
    if (2 * d_min > n - 1) throw DMinTooLargeError(d_min, n);
    for (int x = 0; x < n; ++x) {
      if (g.degree(x) == d_min) {
        v = x;
        break;
      }
    }
  } else {
    for (int x = 0; x < n; ++x) {
      if (g.degree(x) <= n - 2) {
        v = x;
        break;
      }
    }
  }

  const auto second_ring = neighborhood_at_distance(g, v, 2);
  // Connectivity plus a missing edge at v guarantee N_2(v) is nonempty.
  if (second_ring.empty()) throw GraphCompleteError();
  return {v, second_ring.front()};
}

VertexFunction build_thm1_witness(const Graph& g, int v, int w) {
  require_degrees(g);
  return pair_witness(g, v, w, 0.5 * (g.vertex_count() - 1));
}

std::pair<VertexFunction, double> build_thm3_witness(const Graph& g, int v, int w) {
  require_degrees(g);
  const int n = g.vertex_count();
  const int d_min = g.min_degree();
  if (2 * d_min > n - 1) throw DMinTooLargeError(d_min, n);
  const double eta = std::sqrt(static_cast<double>(d_min) * (n - 1 - d_min));
  return {pair_witness(g, v, w, eta), eta};
}

PointwiseAudit audit_pointwise(const Graph& g, const Certificate& cert) {
  PointwiseAudit audit;
  audit.min_slack = std::numeric_limits<double>::infinity();
  const VertexFunction lf = apply_laplacian(g, cert.witness);
  for (int x = 0; x < g.vertex_count(); ++x) {
    const double fx = cert.witness[x];
    if (fx == 0.0) continue;
    AuditEntry entry;
    entry.vertex = x;
    entry.value = fx;
    entry.laplacian = lf[x];
    entry.slack = (fx * lf[x] - cert.bound * fx * fx) / std::abs(fx);
    audit.min_slack = std::min(audit.min_slack, entry.slack);
    audit.entries.push_back(entry);
  }
  if (cert.pair) {
    const auto [v, w] = *cert.pair;
    audit.pair_sum_minus_common =
        cert.witness[v] + cert.witness[w] - static_cast<double>(cert.common_neighbors);
    if (*audit.pair_sum_minus_common < 0.0)
      throw Error("witness invariant violated: f(v) + f(w) < |N(v) cap N(w)|");
  }
  return audit;
}

namespace {

CertificationResult certify_thm1_connected(const Graph& g) {
  const int n = g.vertex_count();
  const auto [v, w] = select_witness_pair(g, Method::kThm1);
  const VertexFunction f = build_thm1_witness(g, v, w);
  const Fraction bound = thm1_lower_bound(n);
  CertificationResult result;
  result.certificate = make_pair_certificate(g, Method::kThm1, v, w, f, bound.value(), bound,
                                             std::nullopt, all_vertices(n));
  result.audit = audit_pointwise(g, result.certificate);
  return result;
}

}  // namespace

CertificationResult certify_thm1(const Graph& g) {
  require_degrees(g);
  if (is_complete(g)) throw GraphCompleteError();
  if (is_connected(g)) return certify_thm1_connected(g);

  // Disconnected: the smallest component has at most n/2 vertices, so the
  // classical bound on it already clears (n+1)/(n-1).
  const int n = g.vertex_count();
  const Fraction bound = thm1_lower_bound(n);
  auto parts = connected_components(g);
  const auto smallest =
      std::min_element(parts.components.begin(), parts.components.end(),
                       [](const auto& a, const auto& b) { return a.size() < b.size(); });
  const std::vector<int>& comp = *smallest;
  const auto sub = induced_subgraph(g, comp);

  Certificate cert;
  if (is_complete(sub.graph)) {
    cert.method = Method::kSmallestComponent;
    cert.component_method = Method::kClassical;
    cert.bound = bound.value();
    cert.bound_exact = bound;
    cert.witness = indicator_difference(n, comp[0], comp[1]);
    cert.component = comp;
    cert.rayleigh = rayleigh_quotient(g, cert.witness);
  } else {
    CertificationResult inner = certify_thm1(sub.graph);
    cert.method = Method::kSmallestComponent;
    cert.component_method = inner.certificate.method;
    cert.bound = bound.value();
    cert.bound_exact = bound;
    cert.witness.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < sub.graph.vertex_count(); ++i) {
      cert.witness[sub.vertex_map[i]] = inner.certificate.witness[i];
    }
    if (inner.certificate.pair) {
      cert.pair = {{sub.vertex_map[inner.certificate.pair->first],
                    sub.vertex_map[inner.certificate.pair->second]}};
      cert.common_neighbors = inner.certificate.common_neighbors;
      cert.mean_degree = inner.certificate.mean_degree;
    }
    cert.component = comp;
    cert.rayleigh = rayleigh_quotient(g, cert.witness);
  }

  CertificationResult result;
  result.certificate = std::move(cert);
  result.audit = audit_pointwise(g, result.certificate);
  return result;
}

CertificationResult certify_thm3(const Graph& g) {
  require_degrees(g);
  const int n = g.vertex_count();
  const int d_min = g.min_degree();
  if (2 * d_min > n - 1) throw DMinTooLargeError(d_min, n);

  int v = 0;
  while (g.degree(v) != d_min) ++v;

  const double bound = thm3_lower_bound(n, d_min);
  const std::optional<Fraction> bound_exact = thm3_lower_bound_exact(n, d_min);

  // Component containing v.
  const auto dist = bfs_distances(g, v);
  std::vector<int> component;
  for (int x = 0; x < n; ++x) {
    if (dist[x] >= 0) component.push_back(x);
  }

  const bool component_complete = [&] {
    for (const int x : component) {
      if (g.degree(x) != static_cast<int>(component.size()) - 1) return false;
    }
    return true;
  }();

  Certificate cert;
  if (component_complete) {
    // v's component is a clique of order d_min + 1; its classical bound
    // (d_min+1)/d_min dominates psi(n, d_min) because n >= 2 d_min + 1.
    cert.method = Method::kThm3;
    cert.component_method = Method::kClassical;
    cert.bound = bound;
    cert.bound_exact = bound_exact;
    cert.witness = indicator_difference(n, component[0], component[1]);
    cert.eta = std::sqrt(static_cast<double>(d_min) * (n - 1 - d_min));
    cert.component = component;
    cert.rayleigh = rayleigh_quotient(g, cert.witness);
  } else {
    // N_2(v) is nonempty inside v's component; the pointwise estimates use
    // full-graph n throughout, so the witness is audited on g directly.
    const auto second_ring = neighborhood_at_distance(g, v, 2);
    if (second_ring.empty()) throw Error("internal: non-complete component without second ring");
    const int w = second_ring.front();
    auto [f, eta] = build_thm3_witness(g, v, w);
    cert = make_pair_certificate(g, Method::kThm3, v, w, f, bound, bound_exact, eta, component);
  }

  CertificationResult result;
  result.certificate = std::move(cert);
  result.audit = audit_pointwise(g, result.certificate);
  return result;
}

double lemma_slack(int n, int d_v, int d_w) {
  if (n < 3 || d_v < 1 || 2 * d_v > n - 1 || d_w < d_v || d_w > n - 2)
    throw std::invalid_argument("lemma_slack: (n, d_v, d_w) outside domain");
  const double eta = std::sqrt(static_cast<double>(d_v) * (n - 1 - d_v));
  const double factor = std::max(1, d_v + d_w + 2 - n);
  const double lhs = eta / (n - 1) * factor * (1.0 / d_v + 1.0 / d_w - 1.0 / eta);
  const double rhs = 1.0 / eta - 1.0 / (n - 1);
  return lhs - rhs;
}

bool lemma_check(int n, int d_v, int d_w) { return lemma_slack(n, d_v, d_w) >= -1e-12; }

LemmaGridResult lemma_grid(int n_max) {
  LemmaGridResult result;
  result.min_slack = std::numeric_limits<double>::infinity();
  for (int n = 3; n <= n_max; ++n) {
    for (int d_v = 1; 2 * d_v <= n - 1; ++d_v) {
      for (int d_w = d_v; d_w <= n - 2; ++d_w) {
        const double slack = lemma_slack(n, d_v, d_w);
        ++result.cases;
        result.min_slack = std::min(result.min_slack, slack);
        if (slack < -1e-12) result.all_hold = false;
        if (d_w == n - 1 - d_v) {
          result.max_boundary_abs_slack = std::max(result.max_boundary_abs_slack, std::abs(slack));
        }
      }
    }
  }
  return result;
}

}  // namespace lapmax
