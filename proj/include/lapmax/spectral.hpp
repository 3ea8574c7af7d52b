#pragma once

#include <vector>

#include "lapmax/graph.hpp"

namespace lapmax {

/// Real-valued function on the vertices of an associated graph.
using VertexFunction = std::vector<double>;

/// Dense symmetric matrix, full row-major storage. Sized for n <= 64.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const { return n_; }
  double& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_ = 0;
  std::vector<double> a_;
};

/// Lf(x) = (1/d(x)) * sum over y ~ x of (f(x) - f(y)).
/// Throws IsolatedVertexError when some vertex has degree 0.
VertexFunction apply_laplacian(const Graph& g, const VertexFunction& f);

/// <f,h> = sum over x of f(x) h(x) d(x).
double degree_inner_product(const Graph& g, const VertexFunction& f, const VertexFunction& h);

/// <Lf,f> / <f,f>; a lower bound on the largest eigenvalue for any f != 0.
double rayleigh_quotient(const Graph& g, const VertexFunction& f);

/// S = I - D^{-1/2} A D^{-1/2}, similar to the normalized Laplacian.
SymmetricMatrix symmetric_form(const Graph& g);

struct EigenDecomposition {
  std::vector<double> eigenvalues;                // ascending
  std::vector<std::vector<double>> eigenvectors;  // eigenvectors[i] unit 2-norm
};

/// Cyclic Jacobi rotations with the classic threshold strategy. Converges
/// when the off-diagonal Frobenius norm drops below tol; throws
/// NonConvergenceError after the sweep cap (a bug signal for this matrix
/// class, not an input condition).
EigenDecomposition jacobi_eigensolve(const SymmetricMatrix& s, double tol = 1e-12);

struct Spectrum {
  std::vector<double> eigenvalues;              // ascending; first is 0
  std::vector<VertexFunction> eigenfunctions;   // of L, unit degree-norm
  std::vector<double> residuals;                // per pair, max_x |Lf(x) - lambda f(x)|

  double lambda_max() const { return eigenvalues.back(); }
  double max_residual() const;
  /// Number of eigenvalues within tol of value.
  int multiplicity_of(double value, double tol = 1e-8) const;
  int multiplicity_of_max(double tol = 1e-8) const;
};

/// Full spectrum of the normalized Laplacian: eigensolve on the symmetric
/// form, eigenvectors mapped back by componentwise division by sqrt(d(x)).
Spectrum spectrum(const Graph& g);

/// True iff max_x |Lf(x) - lambda f(x)| <= tol. Throws ZeroFunctionError on f == 0.
bool verify_eigenpair(const Graph& g, double lambda, const VertexFunction& f, double tol);

}  // namespace lapmax
