#include "lapmax/serialize.hpp"

#include <cmath>

#include "lapmax/errors.hpp"

namespace lapmax {

std::string method_name(Method m) {
  switch (m) {
    case Method::kThm1:
      return "thm1";
    case Method::kThm3:
      return "thm3";
    case Method::kClassical:
      return "classical";
    case Method::kSmallestComponent:
      return "smallest-component";
  }
  return "unknown";
}

Method method_from_name(const std::string& name) {
  if (name == "thm1") return Method::kThm1;
  if (name == "thm3") return Method::kThm3;
  if (name == "classical") return Method::kClassical;
  if (name == "smallest-component") return Method::kSmallestComponent;
  throw ParseError("unknown certificate method: " + name);
}

json fraction_to_json(const Fraction& f) {
  return json{{"num", f.num()}, {"den", f.den()}, {"value", f.value()}};
}

json spectrum_to_json(const Graph& g, const Spectrum& spec) {
  json out;
  out["schema"] = "lapmax.spectrum/1";
  out["n"] = g.vertex_count();
  out["graph6"] = to_graph6(g);
  out["eigenvalues"] = spec.eigenvalues;
  out["max_residual"] = spec.max_residual();
  out["components"] = connected_components(g).components.size();
  return out;
}

json bound_report_to_json(const BoundReport& report) {
  json out;
  out["schema"] = "lapmax.bounds/1";
  out["n"] = report.n;
  out["m"] = report.m;
  out["d_min"] = report.d_min;
  out["max_degree"] = report.max_degree;
  out["classical"] = fraction_to_json(report.classical);
  out["thm1"] = report.thm1 ? fraction_to_json(*report.thm1) : json(nullptr);
  if (report.thm3) {
    json t3{{"value", *report.thm3}};
    if (report.thm3_exact) t3["exact"] = fraction_to_json(*report.thm3_exact);
    out["thm3"] = t3;
  } else {
    out["thm3"] = nullptr;
  }
  out["li_guo_shiu"] = fraction_to_json(report.li_guo_shiu);
  out["best"] = report.best;
  out["lambda_n"] = report.lambda_max ? json(*report.lambda_max) : json(nullptr);
  return out;
}

json certificate_to_json(const Graph& g, const Certificate& cert, const PointwiseAudit& audit) {
  json out;
  out["schema"] = "lapmax.certificate/1";
  out["graph6"] = to_graph6(g);
  out["method"] = method_name(cert.method);
  if (cert.component_method) out["component_method"] = method_name(*cert.component_method);
  json bound{{"value", cert.bound}};
  if (cert.bound_exact) {
    bound["num"] = cert.bound_exact->num();
    bound["den"] = cert.bound_exact->den();
  }
  out["bound"] = bound;
  if (cert.pair) out["pair"] = json::array({cert.pair->first, cert.pair->second});
  if (cert.pair) {
    out["common_neighbors"] = cert.common_neighbors;
    out["mean_degree"] = cert.mean_degree;
  }
  if (cert.eta) out["eta"] = *cert.eta;
  out["component"] = cert.component;
  out["witness"] = cert.witness;
  out["rayleigh"] = cert.rayleigh;
  json entries = json::array();
  for (const auto& e : audit.entries) {
    entries.push_back(json{{"vertex", e.vertex}, {"f", e.value}, {"lf", e.laplacian},
                           {"slack", e.slack}});
  }
  out["audit"] = json{{"min_slack", audit.min_slack}, {"entries", entries}};
  if (audit.pair_sum_minus_common) {
    out["audit"]["pair_sum_minus_common"] = *audit.pair_sum_minus_common;
  }
  return out;
}

bool reverify_certificate(const json& record, double tol, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  try {
    if (record.at("schema").get<std::string>() != "lapmax.certificate/1") {
      return fail("unexpected schema");
    }
    const Graph g = parse_graph6(record.at("graph6").get<std::string>());
    const VertexFunction witness = record.at("witness").get<VertexFunction>();
    if (static_cast<int>(witness.size()) != g.vertex_count()) {
      return fail("witness dimension mismatch");
    }
    const double bound = record.at("bound").at("value").get<double>();
    if (record.at("bound").contains("num")) {
      const double exact = static_cast<double>(record.at("bound").at("num").get<std::int64_t>()) /
                           static_cast<double>(record.at("bound").at("den").get<std::int64_t>());
      if (std::abs(exact - bound) > 1e-12) return fail("exact bound disagrees with float bound");
    }
    const double stored_rayleigh = record.at("rayleigh").get<double>();

    const VertexFunction lf = apply_laplacian(g, witness);
    double num = 0.0;
    double den = 0.0;
    for (int x = 0; x < g.vertex_count(); ++x) {
      num += lf[x] * witness[x] * g.degree(x);
      den += witness[x] * witness[x] * g.degree(x);
    }
    if (den == 0.0) return fail("witness is the zero function");
    const double rayleigh = num / den;

    if (std::abs(rayleigh - stored_rayleigh) > tol) return fail("stored Rayleigh quotient differs");
    if (rayleigh < bound - tol) return fail("witness does not reach the claimed bound");
    return true;
  } catch (const std::exception& e) {
    return fail(std::string("record invalid: ") + e.what());
  }
}

namespace {

std::string kind_name(EqualityKind kind) {
  switch (kind) {
    case EqualityKind::kSingleEdgeComplement:
      return "single-edge-complement";
    case EqualityKind::kBalancedBipartiteComplement:
      return "balanced-bipartite-complement";
    case EqualityKind::kNotEquality:
      return "not-equality";
  }
  return "unknown";
}

}  // namespace

json verdict_to_json(const Graph& g, const RigidityVerdict& verdict) {
  json out;
  out["schema"] = "lapmax.verdict/1";
  out["graph6"] = to_graph6(g);
  out["kind"] = kind_name(verdict.kind);
  if (verdict.pair) out["pair"] = json::array({verdict.pair->first, verdict.pair->second});
  if (!verdict.part_v.empty()) {
    out["part_v"] = verdict.part_v;
    out["part_w"] = verdict.part_w;
  }
  if (verdict.center) out["center"] = *verdict.center;
  out["removed_isolated"] = verdict.removed_isolated;
  return out;
}

json edge_removal_to_json(const EdgeRemovalReport& report) {
  json out;
  out["schema"] = "lapmax.edge-removal/1";
  out["clique_size"] = report.clique_size;
  out["n"] = report.n;
  out["target"] = fraction_to_json(report.target);
  out["lambda_base"] = report.lambda_base;
  json adds = json::array();
  for (const auto& a : report.additions) {
    adds.push_back(json{{"edge", json::array({a.u, a.v})}, {"lambda_max", a.lambda_max}});
  }
  out["additions"] = adds;
  out["all_exceed"] = report.all_exceed;
  return out;
}

json sweep_report_to_json(const SweepReport& report) {
  json out;
  out["schema"] = "lapmax.sweep/1";
  out["n_min"] = report.n_min;
  out["n_max"] = report.n_max;
  out["checks"] = json{{"thm1", report.checks.thm1},
                       {"thm2", report.checks.thm2},
                       {"thm3", report.checks.thm3},
                       {"classical", report.checks.classical},
                       {"bipartite", report.checks.bipartite}};
  out["graphs_enumerated"] = report.graphs_enumerated;
  out["graphs_scanned"] = report.graphs_scanned;
  out["certificates"] = report.certificates;
  out["violations_total"] = report.violations_total;
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back(json{{"graph6", v.graph6},
                              {"claim", v.claim},
                              {"observed", v.observed},
                              {"expected", v.expected}});
  }
  out["violations"] = violations;
  json census = json::object();
  for (const auto& [n, entry] : report.equality_census) {
    census[std::to_string(n)] = json{{"single_edge", entry.single_edge},
                                     {"balanced", entry.balanced},
                                     {"total", entry.single_edge + entry.balanced}};
  }
  out["equality_census"] = census;
  out["worst_slack"] = report.worst_slack;
  out["runtime_seconds"] = report.runtime_seconds;
  return out;
}

json lemma_grid_to_json(const LemmaGridResult& result, int n_max) {
  return json{{"schema", "lapmax.lemma-grid/1"},
              {"n_max", n_max},
              {"cases", result.cases},
              {"all_hold", result.all_hold},
              {"min_slack", result.min_slack},
              {"max_boundary_abs_slack", result.max_boundary_abs_slack}};
}

}  // namespace lapmax
