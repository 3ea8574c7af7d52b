// Command-line front end: spectra, bound reports, certificates, equality
// classification, and the exhaustive / randomized verification sweeps.
//
// Exit codes: 0 on success with no violations, 1 when a sweep or
// re-verification reports violations, 2 on operational errors (bad input,
// unreadable file, isolated vertex, ...).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lapmax/bounds.hpp"
#include "lapmax/certify.hpp"
#include "lapmax/errors.hpp"
#include "lapmax/graph.hpp"
#include "lapmax/harness.hpp"
#include "lapmax/rigidity.hpp"
#include "lapmax/serialize.hpp"
#include "lapmax/spectral.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitError = 2;

lapmax::Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lapmax::ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return lapmax::parse_graph_auto(buffer.str());
}

void print_json(const lapmax::json& j) { std::cout << j.dump(2) << '\n'; }

int run_spectrum(const std::string& file, bool as_json) {
  const lapmax::Graph g = load_graph(file);
  const lapmax::Spectrum spec = lapmax::spectrum(g);
  if (as_json) {
    print_json(lapmax::spectrum_to_json(g, spec));
    return kExitOk;
  }
  std::cout << "n = " << g.vertex_count() << ", m = " << g.edge_count() << '\n';
  std::cout << "eigenvalues (ascending):\n";
  std::cout.precision(15);
  for (const double lambda : spec.eigenvalues) std::cout << "  " << lambda << '\n';
  std::cout << "max residual = " << spec.max_residual() << '\n';
  return kExitOk;
}

int run_bounds(const std::string& file, bool as_json, bool skip_spectrum) {
  const lapmax::Graph g = load_graph(file);
  const lapmax::BoundReport report = lapmax::bound_report(g, !skip_spectrum);
  if (as_json) {
    print_json(lapmax::bound_report_to_json(report));
    return kExitOk;
  }
  std::cout.precision(15);
  std::cout << "n = " << report.n << ", m = " << report.m << ", d_min = " << report.d_min
            << ", max_degree = " << report.max_degree << '\n';
  std::cout << "classical    : " << report.classical.str() << " = " << report.classical.value()
            << '\n';
  if (report.thm1) {
    std::cout << "thm1         : " << report.thm1->str() << " = " << report.thm1->value() << '\n';
  } else {
    std::cout << "thm1         : not applicable (complete graph)\n";
  }
  if (report.thm3) {
    std::cout << "thm3         : " << *report.thm3;
    if (report.thm3_exact) std::cout << " = " << report.thm3_exact->str();
    std::cout << '\n';
  } else {
    std::cout << "thm3         : not applicable (d_min > (n-1)/2)\n";
  }
  std::cout << "li_guo_shiu  : " << report.li_guo_shiu.str() << " = "
            << report.li_guo_shiu.value() << '\n';
  std::cout << "best         : " << report.best << '\n';
  if (report.lambda_max) std::cout << "lambda_n     : " << *report.lambda_max << '\n';
  return kExitOk;
}

int run_certify(const std::string& file, const std::string& method, bool as_json, bool reverify) {
  const lapmax::Graph g = load_graph(file);
  lapmax::CertificationResult res;
  if (method == "thm1") {
    res = lapmax::certify_thm1(g);
  } else if (method == "thm3") {
    res = lapmax::certify_thm3(g);
  } else {
    throw lapmax::ParseError("unknown method '" + method + "' (expected thm1 or thm3)");
  }
  const lapmax::json record = lapmax::certificate_to_json(g, res.certificate, res.audit);

  bool verified = true;
  std::string reason;
  if (reverify) verified = lapmax::reverify_certificate(record, 1e-9, &reason);

  if (as_json) {
    lapmax::json out = record;
    if (reverify) out["reverified"] = verified;
    print_json(out);
  } else {
    std::cout.precision(15);
    std::cout << "method   : " << lapmax::method_name(res.certificate.method);
    if (res.certificate.component_method) {
      std::cout << " (" << lapmax::method_name(*res.certificate.component_method)
                << " on component)";
    }
    std::cout << '\n';
    std::cout << "bound    : " << res.certificate.bound;
    if (res.certificate.bound_exact) std::cout << " = " << res.certificate.bound_exact->str();
    std::cout << '\n';
    if (res.certificate.pair) {
      std::cout << "pair     : (" << res.certificate.pair->first << ", "
                << res.certificate.pair->second << ")   common neighbors = "
                << res.certificate.common_neighbors << ", mean degree = "
                << res.certificate.mean_degree << '\n';
    }
    if (res.certificate.eta) std::cout << "eta      : " << *res.certificate.eta << '\n';
    std::cout << "rayleigh : " << res.certificate.rayleigh << '\n';
    std::cout << "witness  :";
    for (const double x : res.certificate.witness) std::cout << ' ' << x;
    std::cout << '\n';
    std::cout << "min slack: " << res.audit.min_slack << '\n';
    if (reverify) {
      std::cout << "reverify : " << (verified ? "ok" : "FAILED (" + reason + ")") << '\n';
    }
  }
  return verified ? kExitOk : kExitViolations;
}

int run_classify(const std::string& file, bool as_json, bool with_eigenbasis) {
  const lapmax::Graph g = load_graph(file);
  const lapmax::RigidityVerdict verdict = lapmax::classify_equality(g);
  lapmax::json out = lapmax::verdict_to_json(g, verdict);

  if (with_eigenbasis && verdict.kind != lapmax::EqualityKind::kNotEquality) {
    const auto basis = lapmax::equality_eigenbasis(g, verdict);
    lapmax::json jbasis = lapmax::json::array();
    for (const auto& [lambda, f] : basis) {
      jbasis.push_back(lapmax::json{{"eigenvalue", lapmax::fraction_to_json(lambda)},
                                    {"function", f}});
    }
    out["eigenbasis"] = jbasis;
  }

  if (as_json) {
    print_json(out);
    return kExitOk;
  }
  std::cout << "kind: " << out["kind"].get<std::string>() << '\n';
  if (verdict.pair) {
    std::cout << "missing edge: (" << verdict.pair->first << ", " << verdict.pair->second << ")\n";
  }
  if (!verdict.part_v.empty()) {
    auto print_set = [](const std::vector<int>& s) {
      std::cout << '{';
      for (std::size_t i = 0; i < s.size(); ++i) std::cout << (i ? "," : "") << s[i];
      std::cout << '}';
    };
    std::cout << "parts: ";
    print_set(verdict.part_v);
    std::cout << " / ";
    print_set(verdict.part_w);
    std::cout << "  center: " << *verdict.center << '\n';
  }
  if (with_eigenbasis && out.contains("eigenbasis")) {
    std::cout << "eigenbasis (" << out["eigenbasis"].size() << " functions):\n";
    for (const auto& entry : out["eigenbasis"]) {
      std::cout << "  lambda = " << entry["eigenvalue"]["num"].get<std::int64_t>() << '/'
                << entry["eigenvalue"]["den"].get<std::int64_t>() << '\n';
    }
  }
  return kExitOk;
}

int run_sweep(int n_min, int n_max, bool as_json, bool force, int workers, int random_n,
              int random_trials, std::uint64_t seed) {
  lapmax::SweepReport report;
  if (random_trials > 0) {
    report = lapmax::random_sweep(random_n, random_trials, seed);
  } else {
    if (n_max > 7 && !force) {
      throw lapmax::Error("sweep with n_max > 7 takes hours; pass --force to run it anyway");
    }
    if (n_max > 8) throw lapmax::Error("sweep supports n_max <= 8");
    report = lapmax::sweep(n_min, n_max, lapmax::CheckSet{}, workers);
  }

  if (as_json) {
    print_json(lapmax::sweep_report_to_json(report));
  } else {
    std::cout << "graphs enumerated : " << report.graphs_enumerated << '\n';
    std::cout << "graphs scanned    : " << report.graphs_scanned << '\n';
    std::cout << "certificates      : " << report.certificates << '\n';
    std::cout << "violations        : " << report.violations_total << '\n';
    for (const auto& [n, census] : report.equality_census) {
      std::cout << "equality census n=" << n << " : " << census.single_edge << " single-edge + "
                << census.balanced << " balanced = "
                << (census.single_edge + census.balanced) << '\n';
    }
    std::cout << "worst slack       : " << report.worst_slack << '\n';
    std::cout << "runtime           : " << report.runtime_seconds << " s\n";
    for (const auto& v : report.violations) {
      std::cout << "VIOLATION " << v.claim << " on " << v.graph6 << " observed=" << v.observed
                << " expected=" << v.expected << '\n';
    }
  }
  return report.passed() ? kExitOk : kExitViolations;
}

int run_counterexample(int k, bool as_json) {
  const lapmax::EdgeRemovalReport report = lapmax::edge_removal_demo(k);
  if (as_json) {
    print_json(lapmax::edge_removal_to_json(report));
  } else {
    std::cout.precision(15);
    std::cout << "two K_" << k << " sharing one vertex: n = " << report.n << '\n';
    std::cout << "lambda_n = " << report.lambda_base << " (target " << report.target.str()
              << ")\n";
    std::cout << "single-edge additions: " << report.additions.size() << '\n';
    for (const auto& a : report.additions) {
      std::cout << "  +(" << a.u << "," << a.v << ") -> lambda_n = " << a.lambda_max << '\n';
    }
    std::cout << (report.all_exceed
                      ? "every addition raises lambda_n strictly above the target;\n"
                        "removing that edge strictly decreases the largest eigenvalue\n"
                      : "UNEXPECTED: some addition failed to exceed the target\n");
  }
  return report.all_exceed ? kExitOk : kExitViolations;
}

int run_lemma(int n_max, bool as_json) {
  const lapmax::LemmaGridResult result = lapmax::lemma_grid(n_max);
  if (as_json) {
    print_json(lapmax::lemma_grid_to_json(result, n_max));
  } else {
    std::cout << "grid cases checked : " << result.cases << '\n';
    std::cout << "all hold           : " << (result.all_hold ? "yes" : "NO") << '\n';
    std::cout << "min slack          : " << result.min_slack << '\n';
    std::cout << "boundary |slack|   : " << result.max_boundary_abs_slack << '\n';
  }
  return result.all_hold ? kExitOk : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified lower bounds on the largest normalized-Laplacian eigenvalue"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string file;
  std::string method = "thm1";
  bool skip_spectrum = false;
  bool reverify = false;
  bool eigenbasis = false;
  int n_min = 3;
  int n_max = 7;
  bool force = false;
  int workers = 0;
  int random_n = 0;
  int random_trials = 0;
  std::uint64_t seed = 1;
  int clique = 4;
  int lemma_n_max = 200;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "print the sorted spectrum of a graph");
  spectrum_cmd->add_option("file", file, "graph6 or edge-list file")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "print the closed-form bound report");
  bounds_cmd->add_option("file", file, "graph6 or edge-list file")->required();
  bounds_cmd->add_flag("--skip-spectrum", skip_spectrum, "omit the true largest eigenvalue");

  auto* certify_cmd = app.add_subcommand("certify", "emit a Rayleigh-quotient certificate");
  certify_cmd->add_option("file", file, "graph6 or edge-list file")->required();
  certify_cmd->add_option("--method", method, "thm1 or thm3")->required();
  certify_cmd->add_flag("--verify", reverify, "re-verify the serialized certificate");

  auto* classify_cmd = app.add_subcommand("classify", "classify the equality case");
  classify_cmd->add_option("file", file, "graph6 or edge-list file")->required();
  classify_cmd->add_flag("--eigenbasis", eigenbasis, "include the closed-form eigenbasis");

  auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive or randomized verification sweep");
  sweep_cmd->add_option("--n-min", n_min, "smallest order (default 3)");
  sweep_cmd->add_option("--n-max", n_max, "largest order (default 7)");
  sweep_cmd->add_flag("--force", force, "allow the long n=8 run");
  sweep_cmd->add_option("--workers", workers, "worker threads (default: LAPMAX_THREADS or all)");
  sweep_cmd->add_option("--random-n", random_n, "randomized mode: graph order (3..32)");
  sweep_cmd->add_option("--random-trials", random_trials, "randomized mode: sample count");
  sweep_cmd->add_option("--seed", seed, "randomized mode: RNG seed (default 1)");

  auto* counter_cmd =
      app.add_subcommand("counterexample", "edge-removal monotonicity counterexample");
  counter_cmd->add_option("--k", clique, "clique size (default 4)");

  auto* lemma_cmd = app.add_subcommand("lemma", "check the degree inequality over the full grid");
  lemma_cmd->add_option("--n-max", lemma_n_max, "largest order (default 200)");

  for (auto* cmd : {spectrum_cmd, bounds_cmd, certify_cmd, classify_cmd, sweep_cmd, counter_cmd,
                    lemma_cmd}) {
    cmd->add_flag("--json", as_json, "machine-readable JSON output");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (spectrum_cmd->parsed()) return run_spectrum(file, as_json);
    if (bounds_cmd->parsed()) return run_bounds(file, as_json, skip_spectrum);
    if (certify_cmd->parsed()) return run_certify(file, method, as_json, reverify);
    if (classify_cmd->parsed()) return run_classify(file, as_json, eigenbasis);
    if (sweep_cmd->parsed()) {
      return run_sweep(n_min, n_max, as_json, force, workers, random_n, random_trials, seed);
    }
    if (counter_cmd->parsed()) return run_counterexample(clique, as_json);
    if (lemma_cmd->parsed()) return run_lemma(lemma_n_max, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
