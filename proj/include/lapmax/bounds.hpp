#pragma once

#include <optional>

#include "lapmax/fraction.hpp"
#include "lapmax/graph.hpp"

namespace lapmax {

/// n/(n-1), valid for every graph with n >= 2 vertices and no isolated
/// vertex; attained exactly by the complete graph.
Fraction classical_lower_bound(int n);

/// (n+1)/(n-1), valid for every non-complete graph with n >= 3 vertices.
Fraction thm1_lower_bound(int n);

/// 1 + 1/sqrt(d_min (n-1-d_min)); requires 1 <= d_min <= (n-1)/2, else
/// throws DMinTooLargeError.
double thm3_lower_bound(int n, int d_min);

/// Exact value of thm3_lower_bound when sqrt(d_min (n-1-d_min)) is an
/// integer (in particular d_min == (n-1)/2 for odd n, where the value
/// coincides with (n+1)/(n-1)).
std::optional<Fraction> thm3_lower_bound_exact(int n, int d_min);

/// 2m/(2m - max_degree); requires m >= 1 and 1 <= max_degree <= 2m-1.
Fraction li_guo_shiu_bound(int m, int max_degree);

/// All applicable closed-form lower bounds on the largest eigenvalue for one
/// graph, with exact rationals kept alongside float renderings.
struct BoundReport {
  int n = 0;
  int m = 0;
  int d_min = 0;
  int max_degree = 0;
  Fraction classical{0};
  std::optional<Fraction> thm1;        // absent iff the graph is complete
  std::optional<double> thm3;          // absent iff d_min > (n-1)/2
  std::optional<Fraction> thm3_exact;  // present when thm3 is rational
  Fraction li_guo_shiu{0};
  double best = 0.0;                 // max of the present bounds
  std::optional<double> lambda_max;  // filled on request
};

BoundReport bound_report(const Graph& g, bool compute_spectrum);

}  // namespace lapmax
