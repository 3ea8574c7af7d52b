#include "lapmax/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include "lapmax/bounds.hpp"
#include "lapmax/certify.hpp"
#include "lapmax/rigidity.hpp"
#include "lapmax/spectral.hpp"

namespace lapmax {

namespace {

constexpr double kTol = 1e-9;

void add_violation(SweepReport& report, const Graph& g, const std::string& claim, double observed,
                   double expected) {
  ++report.violations_total;
  if (report.violations.size() < SweepReport::kMaxStoredViolations) {
    report.violations.push_back({to_graph6(g), claim, observed, expected});
  }
}

void merge_into(SweepReport& total, const SweepReport& part) {
  total.graphs_enumerated += part.graphs_enumerated;
  total.graphs_scanned += part.graphs_scanned;
  total.certificates += part.certificates;
  total.violations_total += part.violations_total;
  for (const auto& v : part.violations) {
    if (total.violations.size() < SweepReport::kMaxStoredViolations) total.violations.push_back(v);
  }
  for (const auto& [n, census] : part.equality_census) {
    total.equality_census[n].single_edge += census.single_edge;
    total.equality_census[n].balanced += census.balanced;
  }
  total.worst_slack = std::min(total.worst_slack, part.worst_slack);
}

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  if (const char* env = std::getenv("LAPMAX_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

void check_graph(const Graph& g, const CheckSet& checks, SweepReport& report) {
  const int n = g.vertex_count();
  ++report.graphs_scanned;

  const Spectrum spec = spectrum(g);
  const double lambda_n = spec.lambda_max();

  // Spectral sanity, always on.
  if (std::abs(spec.eigenvalues.front()) > kTol) {
    add_violation(report, g, "lambda1-zero", spec.eigenvalues.front(), 0.0);
  }
  double trace = 0.0;
  for (const double lambda : spec.eigenvalues) {
    trace += lambda;
    if (lambda < -kTol || lambda > 2.0 + kTol) add_violation(report, g, "range", lambda, 2.0);
  }
  if (std::abs(trace - n) > 1e-8) add_violation(report, g, "trace", trace, n);
  const auto components = connected_components(g).components;
  const int kernel_dim = spec.multiplicity_of(0.0);
  if (kernel_dim != static_cast<int>(components.size())) {
    add_violation(report, g, "kernel-multiplicity", kernel_dim,
                  static_cast<double>(components.size()));
  }

  const bool complete = is_complete(g);
  const bool connected = components.size() == 1;

  if (checks.classical && n >= 2) {
    const double classical = classical_lower_bound(n).value();
    if (lambda_n < classical - kTol) add_violation(report, g, "classical-bound", lambda_n, classical);
    const bool at_classical = std::abs(lambda_n - classical) <= kTol;
    if (at_classical != complete) {
      add_violation(report, g, "classical-equality", lambda_n, classical);
    }
  }

  if (checks.bipartite) {
    const bool bipartite = has_bipartite_component(g);
    const bool at_two = lambda_n >= 2.0 - kTol;
    if (bipartite != at_two) add_violation(report, g, "bipartite-two", lambda_n, 2.0);
  }

  if (checks.thm1 && !complete && n >= 3) {
    const double bound = thm1_lower_bound(n).value();
    if (lambda_n < bound - kTol) add_violation(report, g, "thm1-bound", lambda_n, bound);
    const CertificationResult res = certify_thm1(g);
    ++report.certificates;
    if (res.certificate.rayleigh < bound - kTol) {
      add_violation(report, g, "thm1-witness-bound", res.certificate.rayleigh, bound);
    }
    if (res.certificate.rayleigh > lambda_n + kTol) {
      add_violation(report, g, "thm1-witness-sound", res.certificate.rayleigh, lambda_n);
    }
    if (res.audit.min_slack < -kTol) {
      add_violation(report, g, "thm1-slack", res.audit.min_slack, 0.0);
    }
    report.worst_slack = std::min(report.worst_slack, res.audit.min_slack);
    if (!connected && lambda_n <= bound + kTol) {
      add_violation(report, g, "thm1-disconnected-strict", lambda_n, bound);
    }
  }

  if (checks.thm2 && n >= 3) {
    const RigidityVerdict verdict = classify_equality(g);
    const double target = thm1_lower_bound(n).value();
    const bool numeric_equal = std::abs(lambda_n - target) <= kTol;
    const bool classified = verdict.kind != EqualityKind::kNotEquality;
    if (numeric_equal != classified) {
      add_violation(report, g, "thm2-biconditional", lambda_n, target);
    }
    if (verdict.kind == EqualityKind::kSingleEdgeComplement) {
      ++report.equality_census[n].single_edge;
    } else if (verdict.kind == EqualityKind::kBalancedBipartiteComplement) {
      ++report.equality_census[n].balanced;
    }
  }

  if (checks.thm3 && n >= 3 && 2 * g.min_degree() <= n - 1) {
    const double bound = thm3_lower_bound(n, g.min_degree());
    if (lambda_n < bound - kTol) add_violation(report, g, "thm3-bound", lambda_n, bound);
    const CertificationResult res = certify_thm3(g);
    ++report.certificates;
    if (res.certificate.rayleigh < bound - kTol) {
      add_violation(report, g, "thm3-witness-bound", res.certificate.rayleigh, bound);
    }
    if (res.certificate.rayleigh > lambda_n + kTol) {
      add_violation(report, g, "thm3-witness-sound", res.certificate.rayleigh, lambda_n);
    }
    if (res.audit.min_slack < -kTol) {
      add_violation(report, g, "thm3-slack", res.audit.min_slack, 0.0);
    }
    report.worst_slack = std::min(report.worst_slack, res.audit.min_slack);
  }
}

SweepReport sweep(int n_min, int n_max, CheckSet checks, int workers) {
  if (n_min < 3 || n_max < n_min)
    throw std::invalid_argument("sweep: need 3 <= n_min <= n_max");
  const auto start = std::chrono::steady_clock::now();

  SweepReport total;
  total.n_min = n_min;
  total.n_max = n_max;
  total.checks = checks;
  total.worst_slack = std::numeric_limits<double>::infinity();

  const int thread_count = resolve_workers(workers);
  for (int n = n_min; n <= n_max; ++n) {
    const std::uint64_t count = labeled_graph_count(n);
    const int used = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(thread_count), count));
    std::vector<SweepReport> partials(static_cast<std::size_t>(used));
    std::vector<std::thread> threads;
    const std::uint64_t chunk = count / used;
    for (int t = 0; t < used; ++t) {
      const std::uint64_t begin = static_cast<std::uint64_t>(t) * chunk;
      const std::uint64_t end = (t == used - 1) ? count : begin + chunk;
      SweepReport& part = partials[static_cast<std::size_t>(t)];
      part.checks = checks;
      part.worst_slack = std::numeric_limits<double>::infinity();
      threads.emplace_back([n, begin, end, checks, &part] {
        enumerate_labeled_graphs(n, begin, end, [&](const Graph& g) {
          ++part.graphs_enumerated;
          if (g.min_degree() >= 1) check_graph(g, checks, part);
        });
      });
    }
    for (auto& th : threads) th.join();
    for (const auto& part : partials) merge_into(total, part);
  }

  total.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

namespace {

/// Draws single bits from the generator without wasting its 64-bit output.
class BitStream {
 public:
  explicit BitStream(std::mt19937_64& rng) : rng_(rng) {}
  bool next() {
    if (left_ == 0) {
      buffer_ = rng_();
      left_ = 64;
    }
    const bool bit = buffer_ & 1u;
    buffer_ >>= 1;
    --left_;
    return bit;
  }

 private:
  std::mt19937_64& rng_;
  std::uint64_t buffer_ = 0;
  int left_ = 0;
};

}  // namespace

Graph random_connected_graph(int n, std::mt19937_64& rng) {
  BitStream bits(rng);
  for (;;) {
    Graph g(n);
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (bits.next()) g.add_edge(i, j);
      }
    }
    if (is_connected(g)) return g;
  }
}

SweepReport random_sweep(int n, int trials, std::uint64_t seed, CheckSet checks) {
  if (n < 3 || n > 32) throw std::invalid_argument("random_sweep: need 3 <= n <= 32");
  const auto start = std::chrono::steady_clock::now();

  SweepReport report;
  report.n_min = n;
  report.n_max = n;
  report.checks = checks;
  report.worst_slack = std::numeric_limits<double>::infinity();

  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const Graph g = random_connected_graph(n, rng);
    ++report.graphs_enumerated;
    check_graph(g, checks, report);
  }

  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace lapmax
