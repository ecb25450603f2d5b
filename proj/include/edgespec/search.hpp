#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgespec/canonical.hpp"
#include "edgespec/forbidden.hpp"
#include "edgespec/graph.hpp"

namespace edgespec {

/// A graph counts as a maximizer iff lambda >= maxLambda - kMaximizerTol.
inline constexpr double kMaximizerTol = 1e-8;
/// Slack allowed when comparing against a theoretical bound.
inline constexpr double kBoundTol = 1e-8;

enum class Verdict { kBoundHolds, kBoundViolated, kNoBound };
std::string_view to_string(Verdict v);

struct Maximizer {
  CanonicalKey key;
  Graph graph;  // canonical representative
  double lambda = 0.0;
};

struct SearchRecord {
  std::string forbidden;
  int m = 0;
  /// 0 when no F-free graph with m edges exists.
  double max_lambda = 0.0;
  /// Pairwise non-isomorphic, in key order.
  std::vector<Maximizer> maximizers;
  std::optional<double> bound;
  Verdict verdict = Verdict::kNoBound;
  long long graphs = 0;
  double elapsed_ms = 0.0;
};

struct SearchOptions {
  int workers = 1;
  /// Identifier printed in reports; graph6 of F when empty.
  std::string label;
  std::optional<double> bound;
};

/// Maximum spectral radius over all F-free graphs with m edges and no
/// isolated vertices, with every maximizer.
SearchRecord spectral_extremal(const Graph& f, int m, const SearchOptions& opts = {});

/// Largest lambda of each graph, evaluated on `workers` threads.
std::vector<double> spectral_radii(const std::vector<Graph>& graphs, int workers);

struct NikiforovRow {
  int m = 0;
  long long graphs = 0;
  double max_lambda = 0.0;
  /// sqrt((1 - 1/r) 2m).
  double bound = 0.0;
  /// bound - max_lambda.
  double slack = 0.0;
  int violations = 0;
  /// Graphs with lambda^2 within kBoundTol of (1 - 1/r) 2m, and the
  /// complete (regular) multipartite graphs predicted to be exactly those.
  std::vector<CanonicalKey> equality;
  std::vector<CanonicalKey> predicted;
  bool holds() const { return violations == 0 && equality == predicted; }
};

/// Complete bipartite K_{a,b} with ab = m (r = 2), or K_r[t] with
/// C(r,2) t^2 = m (r >= 3); canonical keys in order.
std::vector<CanonicalKey> nikiforov_equality_keys(int r, int m);

/// lambda^2 <= (1 - 1/r) 2m over every K_{r+1}-free graph with m edges.
std::vector<NikiforovRow> verify_nikiforov(int r, int m_lo, int m_hi, int workers = 1);

enum class Shape { kCompleteBipartite, kSplitCore, kUnmatched };
std::string_view to_string(Shape s);

bool is_complete_bipartite(const Graph& g);

/// A vertex set A with 1 < |A| < |F| such that V \ A is independent, G[A]
/// has an edge and lies in M_F, and all but at most one vertex outside A is
/// complete to A. Smallest such A first (then lexicographic).
std::optional<std::vector<int>> find_split_core(const Graph& g, const Graph& f,
                                                const std::vector<Graph>& a_family_of_f);

struct StructureEntry {
  CanonicalKey key;
  Graph graph;
  double lambda = 0.0;
  Shape shape = Shape::kUnmatched;
  std::vector<int> core;
};

struct StructureReport {
  int m = 0;
  double max_lambda = 0.0;
  std::vector<StructureEntry> entries;
  bool all_matched() const;
};

/// Shape of every spectral-extremal graph. Unmatched shapes are reported,
/// not thrown. std::domain_error for stars and F that are not almost
/// bipartite.
StructureReport verify_structure(const Graph& f, int m, int workers = 1);

struct AsymptoticRow {
  long long m = 0;
  double lambda = 0.0;
  /// (lambda - sqrt(m) - e(M)/v(M)) * sqrt(m).
  double deviation = 0.0;
  bool bounded = false;
};

struct AsymptoticReport {
  /// M_F has no graph with an edge: the extremal value is sqrt(m).
  bool complete_bipartite_regime = false;
  Ratio ratio{0};
  Graph core;
  double constant = 0.5;
  std::vector<AsymptoticRow> rows;
  bool holds() const;
};

/// lambda of the predicted extremal shape (core M complete to an
/// independent set, plus one partial vertex) against sqrt(m) + e(M)/v(M).
AsymptoticReport verify_asymptotic(const Graph& f, std::span<const long long> ms,
                                   double constant = 0.5, int workers = 1);

struct Table1Instance {
  std::string row;
  std::string family;
  std::vector<long long> params;
};

/// The two smallest instances of every row (both path lengths for the
/// path row).
const std::vector<Table1Instance>& table1_instances();

/// Row label and k-index of a family instance; std::invalid_argument when
/// the instance is not covered by a row.
std::pair<std::string, int> table1_row(std::string_view family, std::span<const long long> params);

struct Table1Report {
  std::string row;
  std::string family;
  std::vector<long long> params;
  int order = 0;
  int alpha = 0;
  int sigma = 0;
  int expected_k = 0;
  long long sample_m = 0;
  bool split_free = false;
  bool sigma_is_order_minus_alpha() const { return sigma == order - alpha; }
  bool k_matches() const { return sigma - 1 == expected_k; }
  bool pass() const { return sigma_is_order_minus_alpha() && k_matches() && split_free; }
};

Table1Report table1_check(std::string_view family, std::span<const long long> params,
                          long long sample_m = 100);

struct BnRow {
  int m = 0;
  long long graphs = 0;
  /// max of lambda1^2 + lambda2^2 - (1 - 1/r) 2m over K_{r+1}-free graphs of
  /// order >= r + 1; empty when there are none.
  std::optional<double> max_excess;
  std::vector<CanonicalKey> argmax;
  bool holds() const { return !max_excess || *max_excess <= kBoundTol; }
};

std::vector<BnRow> conjecture_bn_probe(int r, int m_lo, int m_hi, int workers = 1);

struct OnsetRow {
  int m = 0;
  bool split_unique = false;
  long long maximizers = 0;
};

struct OnsetReport {
  int k = 0;
  std::vector<OnsetRow> rows;
  /// Least m from which S_{k,m} is the unique maximizer through the end of
  /// the range.
  std::optional<int> onset;
};

/// Where S_{k,m} first becomes the unique F-free maximizer in [m_lo, m_hi].
OnsetReport split_extremality_onset(const Graph& f, int k, int m_lo, int m_hi, int workers = 1);

}  // namespace edgespec
