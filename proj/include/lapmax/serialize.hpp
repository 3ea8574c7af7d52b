#pragma once

#include <string>

#include <json.hpp>

#include "lapmax/bounds.hpp"
#include "lapmax/certify.hpp"
#include "lapmax/harness.hpp"
#include "lapmax/rigidity.hpp"
#include "lapmax/spectral.hpp"

namespace lapmax {

using json = nlohmann::json;

std::string method_name(Method m);
Method method_from_name(const std::string& name);

json fraction_to_json(const Fraction& f);

/// Versioned spectrum record: ascending eigenvalues at full precision, the
/// worst eigenpair residual, and the component count.
json spectrum_to_json(const Graph& g, const Spectrum& spec);

json bound_report_to_json(const BoundReport& report);

/// Self-contained certificate record (graph6, method, bound, witness,
/// audit); third parties can re-verify it with only the Laplacian.
json certificate_to_json(const Graph& g, const Certificate& cert, const PointwiseAudit& audit);

/// Re-verifies a serialized certificate from the record alone: reparses the
/// graph, recomputes the Rayleigh quotient of the stored witness, and checks
/// it against the stored bound and quotient. Returns false (with a reason)
/// instead of throwing on any mismatch.
bool reverify_certificate(const json& record, double tol, std::string* reason = nullptr);

json verdict_to_json(const Graph& g, const RigidityVerdict& verdict);

json edge_removal_to_json(const EdgeRemovalReport& report);

json sweep_report_to_json(const SweepReport& report);

json lemma_grid_to_json(const LemmaGridResult& result, int n_max);

}  // namespace lapmax
