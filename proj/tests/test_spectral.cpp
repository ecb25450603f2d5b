#include <doctest.h>

#include <cmath>
#include <numbers>

#include "edgespec/generators.hpp"
#include "edgespec/spectral.hpp"
#include "oracles.hpp"

using namespace edgespec;

namespace {

constexpr double kTol = 1e-9;

double lam(const Graph& g) { return spectral_radius(g).lambda1; }

void check_perron(const Graph& g, const SpectralResult& r) {
  double norm = 0.0;
  for (double x : r.perron) {
    CHECK(x >= -1e-12);
    norm += x * x;
  }
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rayleigh(g, r.perron) == doctest::Approx(r.lambda1).epsilon(1e-8));
}

}  // namespace

TEST_CASE("closed-form spectral radii") {
  for (int n = 2; n <= 30; ++n) CHECK(std::abs(lam(complete(n)) - (n - 1)) < kTol);
  for (int n = 3; n <= 30; ++n) CHECK(std::abs(lam(cycle(n)) - 2.0) < kTol);
  for (int n = 2; n <= 30; ++n) {
    CHECK(std::abs(lam(path(n)) - 2.0 * std::cos(std::numbers::pi / (n + 1))) < kTol);
  }
  for (int a = 1; a <= 8; ++a)
    for (int b = a; b <= 8; ++b)
      CHECK(std::abs(lam(complete_bipartite(a, b)) - std::sqrt(a * b)) < kTol);
  CHECK(std::abs(lam(hypercube(4)) - 4.0) < kTol);
  CHECK(std::abs(lam(turan(9, 3)) - 6.0) < kTol);
  Graph bowtie(5);
  for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}) bowtie.add_edge(u, v);
  CHECK(std::abs(lam(bowtie) - (1.0 + std::sqrt(17.0)) / 2.0) < kTol);
}

TEST_CASE("second eigenvalue") {
  CHECK(std::abs(spectral_radius(complete_bipartite(3, 4)).lambda2) < kTol);
  CHECK(std::abs(spectral_radius(complete(5)).lambda2 + 1.0) < kTol);
  CHECK(std::abs(spectral_radius(cycle(6)).lambda2 - 1.0) < kTol);
  // Two disjoint triangles: 2 has multiplicity two.
  CHECK(std::abs(spectral_radius(disjoint_union(complete(3), complete(3))).lambda2 - 2.0) < kTol);
}

TEST_CASE("split graph with r = 0 meets the closed form") {
  for (int k = 2; k <= 6; ++k) {
    for (int t = 1; t <= 20; ++t) {
      const long long m = k * (k - 1) / 2 + static_cast<long long>(k) * t;
      const double formula = 0.5 * (k - 1 + std::sqrt(4.0 * m - k * k + 1.0));
      CHECK(std::abs(lam(split_graph(k, m)) - formula) < 1e-8);
      CHECK(std::abs(split_lambda_upper(k, m) - formula) < 1e-12);
    }
  }
}

TEST_CASE("dense and iterative paths agree with an independent Jacobi oracle") {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 120; ++i) {
    const int n = 2 + static_cast<int>(rng() % 39);
    const double p = 0.05 + 0.9 * static_cast<double>(rng() % 1000) / 1000.0;
    const Graph g = oracle::random_graph(rng, n, p);
    const auto ev = oracle::jacobi_eigenvalues(oracle::adjacency(g));
    SpectralOptions dense;
    dense.force_dense = true;
    SpectralOptions iter;
    iter.force_iterative = true;
    const SpectralResult a = spectral_radius(g, dense);
    const SpectralResult b = spectral_radius(g, iter);
    CHECK(std::abs(a.lambda1 - ev[0]) < 1e-9);
    CHECK(std::abs(b.lambda1 - ev[0]) < 1e-8);
    CHECK(std::abs(a.lambda2 - ev[1]) < 1e-8);
    CHECK(std::abs(b.lambda2 - ev[1]) < 1e-6);
    check_perron(g, a);
    check_perron(g, b);
  }
}

TEST_CASE("adjacency spectrum sums to zero and squares to 2m") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    const Graph g = oracle::random_graph(rng, 12, 0.4);
    const auto ev = adjacency_spectrum(g);
    double s = 0.0;
    double s2 = 0.0;
    for (double x : ev) {
      s += x;
      s2 += x * x;
    }
    CHECK(std::abs(s) < 1e-9);
    CHECK(std::abs(s2 - 2.0 * g.num_edges()) < 1e-8);
  }
}

TEST_CASE("sparse input matches dense input") {
  const Graph g = split_graph(3, 90);
  const SpectralResult d = spectral_radius(g);
  const SpectralResult s = spectral_radius(to_sparse(g));
  CHECK(std::abs(d.lambda1 - s.lambda1) < 1e-9);
}

TEST_CASE("Rayleigh quotient of two-level vectors is a lower bound") {
  const Graph g = complete_bipartite(3, 5);
  const std::vector<int> a = {0, 1, 2};
  const std::vector<int> c = {3, 4, 5, 6, 7};
  CHECK(rayleigh(g, two_level_vector(8, a, c)) == doctest::Approx(std::sqrt(15.0)));
  const std::vector<int> a2 = {0};
  CHECK(rayleigh(g, two_level_vector(8, a2, c)) <= lam(g) + 1e-12);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(spectral_radius(Graph(0)), std::invalid_argument);
  CHECK_THROWS_AS(spectral_radius(complete(3), -1.0), std::invalid_argument);
  const SpectralResult e = spectral_radius(empty_graph(4));
  CHECK(e.lambda1 == 0.0);
}

TEST_CASE("split graph values and strictness") {
  CHECK(lam(split_graph(3, 9)) == doctest::Approx(1.0 + std::sqrt(7.0)).epsilon(1e-10));
  CHECK(lam(split_graph(2, 8)) < 0.5 * (1.0 + std::sqrt(29.0)) - 1e-6);
  CHECK(lam(star(4)) == doctest::Approx(2.0));
}

TEST_CASE("spectral radius stays below sqrt(2m) and above the average degree") {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 20), 0.4);
    if (g.num_edges() == 0) continue;
    const SpectralResult r = spectral_radius(g);
    CHECK(r.lambda1 < std::sqrt(2.0 * g.num_edges()));
    CHECK(r.lambda1 >= 2.0 * g.num_edges() / g.num_vertices() - kTol);
    CHECK(r.residual <= 1e-8);
    check_perron(g, r);
  }
}

TEST_CASE("complete multipartite graphs have lambda2 <= 0") {
  const std::vector<std::vector<int>> shapes = {{1, 1}, {2, 3}, {1, 2, 3}, {3, 3, 3}, {1, 1, 4, 2}};
  for (const auto& s : shapes) {
    CHECK(spectral_radius(complete_multipartite(s)).lambda2 <= kTol);
  }
}
