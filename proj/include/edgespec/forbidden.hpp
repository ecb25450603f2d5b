#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "edgespec/graph.hpp"

namespace edgespec {

/// Largest pattern accepted by the subgraph embedder and the exhaustive
/// colouring / independent-set routines.
inline constexpr int kPatternCap = 16;
inline constexpr int kIndependenceCap = 20;
/// Largest order searched when maximising e(H)/|H| over M_F.
inline constexpr int kMaximizerOrderCap = 8;

using Ratio = boost::rational<long long>;

/// Whether host has a (not necessarily induced) subgraph isomorphic to
/// pattern. Throws std::length_error when pattern has more than kPatternCap
/// vertices.
bool contains_subgraph(const Graph& host, const Graph& pattern);
/// Same, for an induced copy.
bool contains_induced_subgraph(const Graph& host, const Graph& pattern);

int chromatic_number(const Graph& f);
/// chi(F - e) < chi(F) for some edge e. Requires at least one edge.
bool is_color_critical(const Graph& f);
/// Bipartite, or bipartite after deleting one edge.
bool is_almost_bipartite(const Graph& f);
int independence_number(const Graph& f);
/// Colour surplus: the least size of a colour class over all proper
/// 2-colourings. Requires a bipartite F with an edge (std::domain_error when
/// F is not bipartite).
int color_surplus(const Graph& f);

/// All maximal independent sets, each ascending, in lexicographic order.
std::vector<std::vector<int>> maximal_independent_sets(const Graph& f);

/// A_F = { F - I : I maximal independent } up to isomorphism, canonical
/// representatives in key order.
std::vector<Graph> a_family(const Graph& f);
/// H contains no member of A_F as a subgraph.
bool in_m_family(const Graph& h, const Graph& f);
bool in_m_family(const Graph& h, const std::vector<Graph>& a_family_of_f);

struct MMaximizer {
  Ratio ratio;
  /// Every non-empty graph of M_F attaining the ratio, canonical form,
  /// in key order.
  std::vector<Graph> graphs;
};

/// Highest order that can occur in M_F: every H in M_F has fewer than |F|
/// vertices, and fewer than s when the edgeless graph on s vertices lies in
/// A_F.
int m_family_order_bound(const Graph& f, const std::vector<Graph>& a_family_of_f);

/// max e(H)/|H| over non-empty H in M_F, by exhaustive search up to the
/// order bound. nullopt when M_F has no graph with an edge. Throws
/// std::domain_error for stars and for F that are not almost bipartite, and
/// std::length_error when the order bound exceeds kMaximizerOrderCap.
std::optional<MMaximizer> m_f_maximizer(const Graph& f, int workers = 1);

struct ForbiddenProfile {
  int chromatic = 0;
  bool color_critical = false;
  bool almost_bipartite = false;
  int alpha = 0;
  std::optional<int> sigma;
  std::vector<Graph> a_family;
  std::optional<MMaximizer> maximizer;
  /// Why maximizer is absent, when it is.
  std::string maximizer_note;
};

ForbiddenProfile profile(const Graph& f, int workers = 1);

std::string to_string(const Ratio& r);

}  // namespace edgespec
