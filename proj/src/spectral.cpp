#include "lapmax/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lapmax/errors.hpp"

namespace lapmax {

namespace {

void require_dimension(const Graph& g, const VertexFunction& f) {
  if (static_cast<int>(f.size()) != g.vertex_count())
    throw std::invalid_argument("vertex function dimension does not match graph order");
}

void require_degrees(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) throw IsolatedVertexError(v);
  }
}

bool is_zero(const VertexFunction& f) {
  return std::all_of(f.begin(), f.end(), [](double x) { return x == 0.0; });
}

}  // namespace

VertexFunction apply_laplacian(const Graph& g, const VertexFunction& f) {
  require_dimension(g, f);
  require_degrees(g);
  const int n = g.vertex_count();
  VertexFunction out(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    double sum = 0.0;
    for (std::uint64_t m = g.neighbor_mask(x); m != 0; m &= m - 1) {
      sum += f[std::countr_zero(m)];
    }
    const int d = g.degree(x);
    out[x] = f[x] - sum / d;
  }
  return out;
}

double degree_inner_product(const Graph& g, const VertexFunction& f, const VertexFunction& h) {
  require_dimension(g, f);
  require_dimension(g, h);
  require_degrees(g);
  double sum = 0.0;
  for (int x = 0; x < g.vertex_count(); ++x) sum += f[x] * h[x] * g.degree(x);
  return sum;
}

double rayleigh_quotient(const Graph& g, const VertexFunction& f) {
  require_dimension(g, f);
  if (is_zero(f)) throw ZeroFunctionError();
  const VertexFunction lf = apply_laplacian(g, f);
  return degree_inner_product(g, lf, f) / degree_inner_product(g, f, f);
}

SymmetricMatrix symmetric_form(const Graph& g) {
  require_degrees(g);
  const int n = g.vertex_count();
  SymmetricMatrix s(n);
  std::vector<double> inv_sqrt_deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) inv_sqrt_deg[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  for (int x = 0; x < n; ++x) {
    s.at(x, x) = 1.0;
    for (int y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y)) {
        const double value = -inv_sqrt_deg[x] * inv_sqrt_deg[y];
        s.at(x, y) = value;
        s.at(y, x) = value;
      }
    }
  }
  return s;
}

EigenDecomposition jacobi_eigensolve(const SymmetricMatrix& input, double tol) {
  constexpr int kMaxSweeps = 100;
  const int n = input.size();
  SymmetricMatrix a = input;
  std::vector<std::vector<double>> q(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < n; ++i) q[i][i] = 1.0;  // q[c] is column c of the accumulated rotation

  auto off_norm = [&]() {
    double sq = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) sq += 2.0 * a.at(i, j) * a.at(i, j);
    }
    return std::sqrt(sq);
  };

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    double off_sum = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) off_sum += std::abs(a.at(i, j));
    }
    if (off_sum == 0.0 || off_norm() < tol) break;

    // Skip tiny pivots during the first sweeps so early rotations target
    // the dominant off-diagonal mass.
    const double thresh = (sweep < 3) ? 0.2 * off_sum / (n * n) : 0.0;

    for (int p = 0; p < n - 1; ++p) {
      for (int r = p + 1; r < n; ++r) {
        const double apr = a.at(p, r);
        const double g = 100.0 * std::abs(apr);
        if (sweep > 3 && std::abs(a.at(p, p)) + g == std::abs(a.at(p, p)) &&
            std::abs(a.at(r, r)) + g == std::abs(a.at(r, r))) {
          a.at(p, r) = 0.0;
          a.at(r, p) = 0.0;
          continue;
        }
        if (std::abs(apr) <= thresh) continue;

        const double h = a.at(r, r) - a.at(p, p);
        double t;
        if (std::abs(h) + g == std::abs(h)) {
          t = apr / h;
        } else {
          const double theta = 0.5 * h / apr;
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double tapr = t * apr;

        a.at(p, p) -= tapr;
        a.at(r, r) += tapr;
        a.at(p, r) = 0.0;
        a.at(r, p) = 0.0;
        for (int j = 0; j < n; ++j) {
          if (j == p || j == r) continue;
          const double ajp = a.at(j, p);
          const double ajr = a.at(j, r);
          a.at(j, p) = ajp - s * (ajr + tau * ajp);
          a.at(j, r) = ajr + s * (ajp - tau * ajr);
          a.at(p, j) = a.at(j, p);
          a.at(r, j) = a.at(j, r);
        }
        for (int j = 0; j < n; ++j) {
          const double qjp = q[p][j];
          const double qjr = q[r][j];
          q[p][j] = qjp - s * (qjr + tau * qjp);
          q[r][j] = qjr + s * (qjp - tau * qjr);
        }
      }
    }
  }
  if (sweep == kMaxSweeps) throw NonConvergenceError(kMaxSweeps);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a.at(i, i) < a.at(j, j); });

  EigenDecomposition out;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (const int i : order) {
    out.eigenvalues.push_back(a.at(i, i));
    out.eigenvectors.push_back(q[i]);
  }
  return out;
}

double Spectrum::max_residual() const {
  double r = 0.0;
  for (const double x : residuals) r = std::max(r, x);
  return r;
}

int Spectrum::multiplicity_of(double value, double tol) const {
  int count = 0;
  for (const double lambda : eigenvalues) {
    if (std::abs(lambda - value) <= tol) ++count;
  }
  return count;
}

int Spectrum::multiplicity_of_max(double tol) const {
  return multiplicity_of(eigenvalues.back(), tol);
}

Spectrum spectrum(const Graph& g) {
  const int n = g.vertex_count();
  const EigenDecomposition eig = jacobi_eigensolve(symmetric_form(g));

  Spectrum spec;
  spec.eigenvalues = eig.eigenvalues;
  spec.eigenfunctions.reserve(n);
  spec.residuals.reserve(n);
  for (int i = 0; i < n; ++i) {
    VertexFunction f(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      f[x] = eig.eigenvectors[i][x] / std::sqrt(static_cast<double>(g.degree(x)));
    }
    const VertexFunction lf = apply_laplacian(g, f);
    double resid = 0.0;
    for (int x = 0; x < n; ++x) {
      resid = std::max(resid, std::abs(lf[x] - spec.eigenvalues[i] * f[x]));
    }
    spec.eigenfunctions.push_back(std::move(f));
    spec.residuals.push_back(resid);
  }
  return spec;
}

bool verify_eigenpair(const Graph& g, double lambda, const VertexFunction& f, double tol) {
  require_dimension(g, f);
  if (is_zero(f)) throw ZeroFunctionError();
  const VertexFunction lf = apply_laplacian(g, f);
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (std::abs(lf[x] - lambda * f[x]) > tol) return false;
  }
  return true;
}

}  // namespace lapmax
