#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lapmax/fraction.hpp"
#include "lapmax/graph.hpp"
#include "lapmax/spectral.hpp"

namespace lapmax {

enum class Method {
  kThm1,
  kThm3,
  kClassical,
  kSmallestComponent,
};

/// Per-vertex record over the witness support. The slack is
/// (f(x) Lf(x) - bound f(x)^2) / |f(x)|, which resolves to
/// Lf(v) - bound*f(v) at the positive pair vertices and to
/// -Lf(x) - bound at the common neighbors (where f == -1).
struct AuditEntry {
  int vertex = 0;
  double value = 0.0;      // f(x)
  double laplacian = 0.0;  // Lf(x)
  double slack = 0.0;
};

struct PointwiseAudit {
  std::vector<AuditEntry> entries;
  double min_slack = 0.0;
  /// f(v) + f(w) - A, recorded whenever a witness pair exists; must be >= 0.
  std::optional<double> pair_sum_minus_common;
};

/// A certified lower bound on the largest eigenvalue, carried with the
/// explicit witness function whose Rayleigh quotient proves it.
struct Certificate {
  Method method = Method::kThm1;
  /// For kSmallestComponent: which argument closed the bound on the
  /// component (kClassical for a complete component, kThm1 otherwise).
  std::optional<Method> component_method;
  double bound = 0.0;
  std::optional<Fraction> bound_exact;  // present when the bound is rational
  VertexFunction witness;               // on the full graph, zero off-component
  std::optional<std::pair<int, int>> pair;  // chosen non-adjacent vertices
  int common_neighbors = 0;                 // A = |N(v) cap N(w)|
  double mean_degree = 0.0;                 // D = (d(v)+d(w))/2
  std::optional<double> eta;                // sqrt(d_min (n-1-d_min))
  std::vector<int> component;               // vertex set the witness lives on
  double rayleigh = 0.0;                    // computed on the full graph
};

struct CertificationResult {
  Certificate certificate;
  PointwiseAudit audit;
};

/// Deterministic pair choice for the connected case: v is the lowest-index
/// vertex with d(v) <= n-2 (kThm1) or with minimum degree (kThm3); w is the
/// lowest-index vertex in N_2(v).
std::pair<int, int> select_witness_pair(const Graph& g, Method mode);

/// f = -1 on N(v) cap N(w), (n-1)/2 * A/d(v) at v, (n-1)/2 * A/d(w) at w,
/// 0 elsewhere. Satisfies Lf = (n+1)/(n-1) f at v and w.
VertexFunction build_thm1_witness(const Graph& g, int v, int w);

/// Same shape with weight eta = sqrt(d_min (n-1-d_min)) instead of (n-1)/2;
/// satisfies Lf = psi f at v and w. Returns the function and eta.
std::pair<VertexFunction, double> build_thm3_witness(const Graph& g, int v, int w);

/// Certifies lambda_n >= (n+1)/(n-1) for a non-complete graph. Connected
/// graphs get the explicit witness; disconnected graphs are certified
/// through the smallest component (classical bound if it is complete,
/// recursive witness otherwise), with the quotient evaluated on the full
/// graph.
CertificationResult certify_thm1(const Graph& g);

/// Certifies lambda_n >= 1 + 1/sqrt(d_min (n-1-d_min)) when
/// d_min <= (n-1)/2. For disconnected graphs the witness lives on the
/// component containing the chosen minimum-degree vertex while the bound
/// keeps the full-graph n.
CertificationResult certify_thm3(const Graph& g);

/// Recomputes the pointwise audit of a certificate produced on g.
PointwiseAudit audit_pointwise(const Graph& g, const Certificate& cert);

/// Slack of the two-case degree inequality
///   eta/(n-1) * max(1, d_v+d_w+2-n) * (1/d_v + 1/d_w - 1/eta)
///     - (1/eta - 1/(n-1))
/// with eta = sqrt(d_v (n-1-d_v)).
double lemma_slack(int n, int d_v, int d_w);

/// True iff the inequality above holds (slack >= -1e-12). Domain:
/// n >= 3, 1 <= d_v <= (n-1)/2, d_v <= d_w <= n-2.
bool lemma_check(int n, int d_v, int d_w);

struct LemmaGridResult {
  bool all_hold = true;
  double min_slack = 0.0;
  /// Largest |slack| seen on the equality boundary d_w == n-1-d_v.
  double max_boundary_abs_slack = 0.0;
  std::uint64_t cases = 0;
};

/// Evaluates lemma_check over the full integer grid 3 <= n <= n_max.
LemmaGridResult lemma_grid(int n_max);

}  // namespace lapmax
