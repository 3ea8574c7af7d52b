#include "lapmax/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lapmax/errors.hpp"
#include "lapmax/spectral.hpp"

namespace lapmax {

Fraction classical_lower_bound(int n) {
  if (n < 2) throw std::invalid_argument("classical_lower_bound: need n >= 2");
  return {n, n - 1};
}

Fraction thm1_lower_bound(int n) {
  if (n < 3) throw std::invalid_argument("thm1_lower_bound: need n >= 3");
  return {n + 1, n - 1};
}

double thm3_lower_bound(int n, int d_min) {
  if (n < 3 || d_min < 1) throw std::invalid_argument("thm3_lower_bound: need n >= 3, d_min >= 1");
  if (2 * d_min > n - 1) throw DMinTooLargeError(d_min, n);
  return 1.0 + 1.0 / std::sqrt(static_cast<double>(d_min) * (n - 1 - d_min));
}

std::optional<Fraction> thm3_lower_bound_exact(int n, int d_min) {
  if (n < 3 || d_min < 1 || 2 * d_min > n - 1) return std::nullopt;
  const std::int64_t square = static_cast<std::int64_t>(d_min) * (n - 1 - d_min);
  const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(square))));
  if (root * root != square) return std::nullopt;
  return Fraction{1} + Fraction{1, root};
}

Fraction li_guo_shiu_bound(int m, int max_degree) {
  if (m < 1) throw std::invalid_argument("li_guo_shiu_bound: need m >= 1");
  if (max_degree < 1 || max_degree > 2 * m - 1)
    throw std::invalid_argument("li_guo_shiu_bound: need 1 <= max_degree <= 2m-1");
  return {2 * m, 2 * m - max_degree};
}

BoundReport bound_report(const Graph& g, bool compute_spectrum) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) throw IsolatedVertexError(v);
  }

  BoundReport report;
  report.n = g.vertex_count();
  report.m = g.edge_count();
  report.d_min = g.min_degree();
  report.max_degree = g.max_degree();
  report.classical = classical_lower_bound(report.n);
  if (!is_complete(g)) report.thm1 = thm1_lower_bound(report.n);
  if (2 * report.d_min <= report.n - 1) {
    report.thm3 = thm3_lower_bound(report.n, report.d_min);
    report.thm3_exact = thm3_lower_bound_exact(report.n, report.d_min);
  }
  report.li_guo_shiu = li_guo_shiu_bound(report.m, report.max_degree);

  report.best = report.classical.value();
  if (report.thm1) report.best = std::max(report.best, report.thm1->value());
  if (report.thm3) report.best = std::max(report.best, *report.thm3);
  report.best = std::max(report.best, report.li_guo_shiu.value());

  if (compute_spectrum) report.lambda_max = spectrum(g).lambda_max();
  return report;
}

}  // namespace lapmax
