#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgespec/graph.hpp"

namespace edgespec {

/// Spectral gaps below this make the eigenvector bounds vacuous.
inline constexpr double kGapFloor = 1e-8;
inline constexpr double kStabilityTol = 1e-9;

struct StabilityReport {
  int edit_count = 0;
  double lambda1_h = 0.0;
  double lambda2_h = 0.0;
  double gap = 0.0;
  /// sum (x_v - y_v)^2 against 8 sqrt(e) / gap.
  double lhs1 = 0.0;
  std::optional<double> rhs1;
  /// sum |x_v^2 - y_v^2| against 8 e^(1/4) / sqrt(gap).
  double lhs2 = 0.0;
  std::optional<double> rhs2;
  bool pass1 = false;
  bool pass2 = false;
  /// gap < kGapFloor: both bounds are skipped (rhs absent, pass flags true).
  bool vacuous = false;
};

/// Compares the unit Perron vectors x of G and y of H on a shared vertex
/// set; the smaller graph is padded with isolated vertices.
StabilityReport verify_pf_stability(const Graph& g, const Graph& h);

/// Missing cross edges: e(K_{V_1..V_r}) - e(G[V_1, .., V_r]). Throws
/// std::invalid_argument for overlapping or out-of-range parts.
long long multipartite_defect(const Graph& g, const std::vector<std::vector<int>>& parts);

struct BlowupSample {
  long long trial = 0;
  /// t sampled vertices per part, ascending.
  std::vector<std::vector<int>> sets;
};

/// Whether trial `trial` of the seeded experiment samples a complete
/// r-partite t-blow-up. Preconditions as for sample_blowup.
std::optional<BlowupSample> blowup_trial(const Graph& g,
                                         const std::vector<std::vector<int>>& parts, int t,
                                         std::uint64_t seed, long long trial);

/// Draws a uniform t-subset of every part per trial and returns the first
/// draw inducing a complete r-partite graph. Requires t >= 1, |V_i| >= t,
/// and equal part sizes when r >= 3 (std::invalid_argument otherwise).
std::optional<BlowupSample> sample_blowup(const Graph& g,
                                          const std::vector<std::vector<int>>& parts, int t,
                                          std::uint64_t seed, long long max_trials);

struct BlowupBatch {
  std::uint64_t seed = 0;
  long long trials = 0;
  long long successes = 0;
  /// Successes whose vertex set independently contains K_r[t].
  long long validated = 0;
  double rate() const { return trials == 0 ? 0.0 : static_cast<double>(successes) / trials; }
};

/// Runs trials 0..trials-1 independently (per-trial streams).
BlowupBatch blowup_batch(const Graph& g, const std::vector<std::vector<int>>& parts, int t,
                         std::uint64_t seed, long long trials, int workers = 1);

/// Deletes `count` distinct cross edges chosen uniformly from those present.
Graph remove_random_cross_edges(const Graph& g, const std::vector<std::vector<int>>& parts,
                                int count, std::uint64_t seed);

/// Parts of K_r[t] as produced by blowup_complete.
std::vector<std::vector<int>> blowup_parts(int r, int t);

struct TuranBounds {
  int n = 0;
  int r = 0;
  int s = 0;  // n mod r
  long long edges = 0;
  double lower = 0.0;  // (1 - 1/r) n^2 / 2 - r / 8
  double upper = 0.0;  // (1 - 1/r) n^2 / 2
  bool identity_ok = false;
  bool lower_ok = false;
  bool upper_ok = false;
  bool pass() const { return identity_ok && lower_ok && upper_ok; }
};

/// Edge count of T_{n,r} against its closed form and bounds, checked in
/// exact integer arithmetic. Requires n >= r >= 1.
TuranBounds turan_edge_bounds(int n, int r);

struct StabilityPair {
  int a = 0;
  int b = 0;
  int edits = 0;
  StabilityReport report;
};

struct StabilityBatch {
  std::uint64_t seed = 0;
  std::vector<StabilityPair> pairs;
  int failures1 = 0;
  int failures2 = 0;
  /// lhs2 > 2 sqrt(lhs1) + tol.
  int chain_failures = 0;
  int vacuous = 0;
};

/// Random pairs: H = K_{a,b} with a, b in [3, 8], G = H with k distinct
/// vertex pairs toggled, k uniform in [0, ab/4].
StabilityBatch stability_batch(std::uint64_t seed, int pairs, int workers = 1);

}  // namespace edgespec
