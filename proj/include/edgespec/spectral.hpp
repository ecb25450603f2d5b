#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "edgespec/graph.hpp"

namespace edgespec {

enum class SpectralMethod { kDenseExact, kIterative };

std::string_view to_string(SpectralMethod m);

struct SpectralOptions {
  double tol = 1e-10;
  long max_iterations = 1'000'000;
  /// Components up to this order use cyclic Jacobi; larger ones use
  /// shifted power iteration.
  int dense_cap = 128;
  /// Force one path for every component (used to cross-check the two).
  bool force_dense = false;
  bool force_iterative = false;
  /// Skip the deflated second phase on the iterative path; lambda2 is then
  /// NaN for results that needed it.
  bool want_lambda2 = true;
};

struct SpectralResult {
  double lambda1 = 0.0;
  /// Second largest adjacency eigenvalue, counted with multiplicity.
  double lambda2 = 0.0;
  /// Unit, nonnegative; supported on one component attaining lambda1.
  std::vector<double> perron;
  /// max_v |(A x)_v - lambda1 x_v| for the returned vector.
  double residual = 0.0;
  SpectralMethod method = SpectralMethod::kDenseExact;
  long iterations = 0;
  bool converged = true;
};

/// Largest two eigenvalues and the Perron vector of the adjacency matrix.
/// Disconnected graphs are handled per component; the Perron vector lives on
/// the lowest-indexed component attaining lambda1 (within tol). A graph with
/// no edges yields lambda1 = lambda2 = 0 and the uniform vector. Throws
/// std::invalid_argument for the zero-vertex graph or tol <= 0.
SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts = {});
SpectralResult spectral_radius(const Graph& g, double tol);
SpectralResult spectral_radius(const SparseGraph& g, const SpectralOptions& opts = {});

/// Full adjacency spectrum in descending order (cyclic Jacobi).
std::vector<double> adjacency_spectrum(const Graph& g);

/// 2 * sum over edges of x_u x_v. Requires a unit vector (within 1e-9).
double rayleigh(const Graph& g, std::span<const double> x);

/// Unit vector with 1/sqrt(2|A|) on A, 1/sqrt(2|C|) on C and 0 elsewhere.
std::vector<double> two_level_vector(int n, std::span<const int> a, std::span<const int> c);

}  // namespace edgespec
