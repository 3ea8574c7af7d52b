#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lapmax/graph.hpp"

namespace lapmax {

/// Which claims a sweep validates per graph. Spectral sanity (eigenvalue
/// range, trace, kernel multiplicity) is always on.
struct CheckSet {
  bool thm1 = true;
  bool thm2 = true;
  bool thm3 = true;
  bool classical = true;
  bool bipartite = true;
};

struct Violation {
  std::string graph6;
  std::string claim;
  double observed = 0.0;
  double expected = 0.0;
};

struct CensusEntry {
  std::uint64_t single_edge = 0;
  std::uint64_t balanced = 0;
};

struct SweepReport {
  int n_min = 0;
  int n_max = 0;
  CheckSet checks;
  std::uint64_t graphs_enumerated = 0;
  std::uint64_t graphs_scanned = 0;  // graphs passing the degree >= 1 filter
  std::uint64_t certificates = 0;
  std::uint64_t violations_total = 0;
  std::vector<Violation> violations;  // first kMaxStoredViolations only
  std::map<int, CensusEntry> equality_census;
  double worst_slack = 0.0;  // minimum audit slack observed
  double runtime_seconds = 0.0;

  static constexpr std::size_t kMaxStoredViolations = 1000;
  bool passed() const { return violations_total == 0; }
};

/// Runs the selected checks on one graph (all degrees >= 1) and folds the
/// outcome into the report. Exposed for reuse by tests and the random sweep.
void check_graph(const Graph& g, const CheckSet& checks, SweepReport& report);

/// Exhaustively enumerates every labeled graph with n_min <= n <= n_max,
/// filters to minimum degree >= 1, and runs the selected checks. The bitmask
/// space is split into contiguous ranges processed by `workers` threads
/// (0 = LAPMAX_THREADS env var, falling back to hardware concurrency).
SweepReport sweep(int n_min, int n_max, CheckSet checks = {}, int workers = 0);

/// Connected Erdos-Renyi sample: edge probability 1/2, rejected until
/// connected. Deterministic for a fixed generator state.
Graph random_connected_graph(int n, std::mt19937_64& rng);

/// Runs the checks on `trials` seeded random connected graphs of order n.
SweepReport random_sweep(int n, int trials, std::uint64_t seed, CheckSet checks = {});

}  // namespace lapmax
