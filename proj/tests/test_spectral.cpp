#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lapmax/errors.hpp"
#include "lapmax/graph.hpp"
#include "lapmax/spectral.hpp"
#include "oracles.hpp"

using namespace lapmax;

namespace {

Graph random_graph(int n, std::mt19937_64& rng, int denom = 2) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng() % denom == 0) g.add_edge(i, j);
    }
  }
  return g;
}

Graph random_degree1_graph(int n, std::mt19937_64& rng, int denom = 2) {
  for (;;) {
    Graph g = random_graph(n, rng, denom);
    if (g.min_degree() >= 1) return g;
  }
}

VertexFunction random_function(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  VertexFunction f(static_cast<std::size_t>(n));
  for (double& x : f) x = dist(rng);
  return f;
}

}  // namespace

TEST_CASE("apply_laplacian on reference inputs") {
  // constants are in the kernel
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_degree1_graph(2 + static_cast<int>(rng() % 10), rng);
    const VertexFunction ones(static_cast<std::size_t>(g.vertex_count()), 1.0);
    for (const double x : apply_laplacian(g, ones)) CHECK(x == doctest::Approx(0.0));
  }

  const Graph p2 = Graph::from_edge_list(2, {{0, 1}});
  const VertexFunction lf = apply_laplacian(p2, {1.0, -1.0});
  CHECK(lf[0] == doctest::Approx(2.0));
  CHECK(lf[1] == doctest::Approx(-2.0));

  // two K_4 sharing vertex 0: the side-difference indicator is an
  // eigenfunction with eigenvalue 1/3
  const Graph glued = glued_complete(4);
  VertexFunction phi(7, 0.0);
  phi[1] = phi[2] = phi[3] = 1.0;
  phi[4] = phi[5] = phi[6] = -1.0;
  const VertexFunction lphi = apply_laplacian(glued, phi);
  for (int x = 0; x < 7; ++x) CHECK(lphi[x] == doctest::Approx(phi[x] / 3.0).epsilon(1e-12));
}

TEST_CASE("isolated vertices are rejected") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(apply_laplacian(g, {1, 1, 1}), IsolatedVertexError);
  CHECK_THROWS_AS(degree_inner_product(g, {1, 1, 1}, {1, 1, 1}), IsolatedVertexError);
  CHECK_THROWS_AS(symmetric_form(g), IsolatedVertexError);
  CHECK_THROWS_AS(spectrum(g), IsolatedVertexError);
  try {
    spectrum(g);
  } catch (const IsolatedVertexError& e) {
    CHECK(e.vertex == 2);
  }
}

TEST_CASE("degree inner product") {
  const Graph k3 = complete_graph(3);
  CHECK(degree_inner_product(k3, {1, 1, 1}, {1, 1, 1}) == doctest::Approx(6.0));

  const Graph p2 = Graph::from_edge_list(2, {{0, 1}});
  CHECK(degree_inner_product(p2, {1, -1}, {1, 1}) == doctest::Approx(0.0));

  const Graph c5 = cycle_graph(5);
  const VertexFunction witness{1, -1, 1, 0, 0};
  CHECK(degree_inner_product(c5, witness, witness) == doctest::Approx(6.0));
}

TEST_CASE("rayleigh quotient") {
  std::mt19937_64 rng(9);
  const Graph g = random_degree1_graph(8, rng);
  CHECK(rayleigh_quotient(g, VertexFunction(8, 1.0)) == doctest::Approx(0.0));

  const Graph p2 = Graph::from_edge_list(2, {{0, 1}});
  CHECK(rayleigh_quotient(p2, {1, -1}) == doctest::Approx(2.0));

  const Graph c5 = cycle_graph(5);
  CHECK(rayleigh_quotient(c5, {1, -1, 1, 0, 0}) == doctest::Approx(5.0 / 3.0).epsilon(1e-12));

  CHECK_THROWS_AS(rayleigh_quotient(c5, VertexFunction(5, 0.0)), ZeroFunctionError);
}

TEST_CASE("symmetric form entries") {
  const SymmetricMatrix k3 = symmetric_form(complete_graph(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(k3.at(i, j) == doctest::Approx(i == j ? 1.0 : -0.5));
    }
  }

  const SymmetricMatrix p2 = symmetric_form(Graph::from_edge_list(2, {{0, 1}}));
  CHECK(p2.at(0, 0) == doctest::Approx(1.0));
  CHECK(p2.at(0, 1) == doctest::Approx(-1.0));

  const SymmetricMatrix s3 = symmetric_form(star_graph(3));
  CHECK(s3.at(0, 1) == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(s3.at(0, 2) == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(s3.at(1, 2) == doctest::Approx(0.0));
}

TEST_CASE("jacobi eigensolve basics") {
  SymmetricMatrix eye(4);
  for (int i = 0; i < 4; ++i) eye.at(i, i) = 1.0;
  const auto id = jacobi_eigensolve(eye);
  for (const double lambda : id.eigenvalues) CHECK(lambda == doctest::Approx(1.0));

  const auto k3 = jacobi_eigensolve(symmetric_form(complete_graph(3)));
  CHECK(std::abs(k3.eigenvalues[0]) < 1e-12);
  CHECK(k3.eigenvalues[1] == doctest::Approx(1.5));
  CHECK(k3.eigenvalues[2] == doctest::Approx(1.5));

  const auto c4 = jacobi_eigensolve(symmetric_form(cycle_graph(4)));
  const std::vector<double> expected{0.0, 1.0, 1.0, 2.0};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(c4.eigenvalues[i] - expected[i]) < 1e-9);
}

TEST_CASE("jacobi reconstruction and orthonormality on random matrices") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 24);
    SymmetricMatrix s(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const double x = dist(rng);
        s.at(i, j) = x;
        s.at(j, i) = x;
      }
    }
    const auto eig = jacobi_eigensolve(s);

    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        double dot = 0.0;
        for (int x = 0; x < n; ++x) dot += eig.eigenvectors[a][x] * eig.eigenvectors[b][x];
        CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) < 1e-10);
      }
    }

    double max_err = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double rec = 0.0;
        for (int k = 0; k < n; ++k) {
          rec += eig.eigenvectors[k][i] * eig.eigenvalues[k] * eig.eigenvectors[k][j];
        }
        max_err = std::max(max_err, std::abs(rec - s.at(i, j)));
      }
    }
    CHECK(max_err < 1e-9);
  }
}

TEST_CASE("spectrum of reference graphs") {
  const Spectrum k23 = spectrum(complete_bipartite_graph(2, 3));
  const std::vector<double> expect_k23{0, 1, 1, 1, 2};
  for (int i = 0; i < 5; ++i) CHECK(std::abs(k23.eigenvalues[i] - expect_k23[i]) < 1e-9);

  const Spectrum cme7 = spectrum(complete_minus_edge(7));
  std::vector<double> expect_cme{0, 1, 7.0 / 6, 7.0 / 6, 7.0 / 6, 7.0 / 6, 4.0 / 3};
  for (int i = 0; i < 7; ++i) CHECK(std::abs(cme7.eigenvalues[i] - expect_cme[i]) < 1e-9);

  const Spectrum glued = spectrum(glued_complete(4));
  std::vector<double> expect_glued{0, 1.0 / 3, 4.0 / 3, 4.0 / 3, 4.0 / 3, 4.0 / 3, 4.0 / 3};
  for (int i = 0; i < 7; ++i) CHECK(std::abs(glued.eigenvalues[i] - expect_glued[i]) < 1e-9);

  CHECK(glued.multiplicity_of_max() == 5);
  CHECK(cme7.max_residual() < 1e-12);
}

TEST_CASE("spectrum agrees with the independent eigensolver") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 23);
    const Graph g = random_degree1_graph(n, rng, 1 + static_cast<int>(rng() % 3));
    const Spectrum mine = spectrum(g);
    const std::vector<double> reference = oracle::spectrum(g);
    for (int i = 0; i < n; ++i) {
      CHECK(std::abs(mine.eigenvalues[i] - reference[i]) < 1e-9);
    }
  }
}

TEST_CASE("closed-form spectra families") {
  for (int n = 2; n <= 20; ++n) {
    const Spectrum s = spectrum(complete_graph(n));
    const auto expect = oracle::complete_spectrum(n);
    for (int i = 0; i < n; ++i) CHECK(std::abs(s.eigenvalues[i] - expect[i]) < 1e-9);
  }
  for (int a = 1; a <= 6; ++a) {
    for (int b = a; a + b <= 20; ++b) {
      const Spectrum s = spectrum(complete_bipartite_graph(a, b));
      const auto expect = oracle::complete_bipartite_spectrum(a, b);
      for (int i = 0; i < a + b; ++i) CHECK(std::abs(s.eigenvalues[i] - expect[i]) < 1e-9);
    }
  }
  for (int n = 3; n <= 20; ++n) {
    const Spectrum s = spectrum(cycle_graph(n));
    const auto expect = oracle::cycle_spectrum(n);
    for (int i = 0; i < n; ++i) CHECK(std::abs(s.eigenvalues[i] - expect[i]) < 1e-9);
  }
}

TEST_CASE("verify_eigenpair") {
  for (const int n : {5, 7, 10}) {
    const Graph g = complete_minus_edge(n);
    VertexFunction phi(static_cast<std::size_t>(n), 0.0);
    phi[0] = 1.0;
    phi[1] = -1.0;
    CHECK(verify_eigenpair(g, 1.0, phi, 1e-10));

    VertexFunction psi(static_cast<std::size_t>(n), -2.0);
    psi[0] += n + 1;
    psi[1] += n + 1;
    CHECK(verify_eigenpair(g, static_cast<double>(n + 1) / (n - 1), psi, 1e-10));
  }

  CHECK(!verify_eigenpair(complete_graph(3), 1.4, {1, -1, 0}, 1e-10));
  CHECK_THROWS_AS(verify_eigenpair(complete_graph(3), 1.0, {0, 0, 0}, 1e-10), ZeroFunctionError);
}

TEST_CASE("laplacian is self-adjoint in the degree inner product") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 16);
    const Graph g = random_degree1_graph(n, rng);
    const VertexFunction f = random_function(n, rng);
    const VertexFunction h = random_function(n, rng);
    const double lhs = degree_inner_product(g, apply_laplacian(g, f), h);
    const double rhs = degree_inner_product(g, f, apply_laplacian(g, h));
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("spectrum invariants on random graphs") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 20);
    const Graph g = random_degree1_graph(n, rng, 2 + static_cast<int>(rng() % 2));
    const Spectrum s = spectrum(g);

    CHECK(std::abs(s.eigenvalues.front()) <= 1e-9);
    double trace = 0.0;
    for (const double lambda : s.eigenvalues) {
      CHECK(lambda >= -1e-9);
      CHECK(lambda <= 2.0 + 1e-9);
      trace += lambda;
    }
    CHECK(std::abs(trace - n) <= 1e-8);
    CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));

    const auto components = connected_components(g).components;
    CHECK(s.multiplicity_of(0.0) == static_cast<int>(components.size()));

    CHECK((s.lambda_max() >= 2.0 - 1e-9) == has_bipartite_component(g));

    CHECK(s.max_residual() < 1e-10);

    // any nonzero function's quotient stays below the top eigenvalue
    const VertexFunction f = random_function(n, rng);
    CHECK(rayleigh_quotient(g, f) <= s.lambda_max() + 1e-9);
  }
}
