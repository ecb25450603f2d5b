#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "edgespec/canonical.hpp"
#include "edgespec/enumerate.hpp"
#include "edgespec/forbidden.hpp"
#include "edgespec/generators.hpp"
#include "oracles.hpp"

using namespace edgespec;

namespace {

// (n, m) -> number of isomorphism classes without isolated vertices, by
// brute force over all labelled graphs on n <= 6 vertices.
std::map<std::pair<int, int>, int> oracle_classes_without_isolated(int n) {
  std::set<std::vector<bool>> seen;
  std::map<std::pair<int, int>, int> out;
  const int pairs = n * (n - 1) / 2;
  for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if (mask >> bit & 1U) g.add_edge(u, v);
    bool isolated = false;
    for (int v = 0; v < n; ++v) isolated = isolated || g.degree(v) == 0;
    if (isolated) continue;
    if (seen.insert(oracle::min_labeling_code(g)).second) ++out[{n, g.num_edges()}];
  }
  return out;
}

}  // namespace

TEST_CASE("edge-mode counts match the known sequence") {
  // Graphs with m edges and no isolated vertices.
  const long long expected[] = {1, 1, 2, 5, 11, 26, 68, 177, 497, 1476, 4613, 15216, 52944};
  for (int m = 0; m <= kMaxEnumerationEdges; ++m) {
    CHECK(static_cast<long long>(enumerate_graphs(m).size()) == expected[m]);
  }
}

TEST_CASE("vertex-mode counts match brute force") {
  const long long expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) {
    CHECK(static_cast<long long>(enumerate_graphs_on_vertices(n).size()) == expected[n]);
  }
}

TEST_CASE("edge-mode output restricted to n <= 6 matches the permutation oracle") {
  std::map<std::pair<int, int>, int> oracle_counts;
  for (int n = 2; n <= 6; ++n) {
    for (auto [key, c] : oracle_classes_without_isolated(n)) oracle_counts[key] = c;
  }
  std::map<std::pair<int, int>, int> got;
  for (int m = 1; m <= 8; ++m) {
    for (const Graph& g : enumerate_graphs(m)) {
      if (g.num_vertices() <= 6) ++got[{g.num_vertices(), m}];
    }
  }
  for (auto [key, c] : oracle_counts) {
    if (key.second <= 8) CHECK(got[key] == c);
  }
  for (auto [key, c] : got) CHECK(oracle_counts[key] == c);
}

TEST_CASE("emitted graphs are pairwise non-isomorphic with m edges and no isolated vertex") {
  for (int m = 1; m <= 8; ++m) {
    std::set<CanonicalKey> keys;
    for (const Graph& g : enumerate_graphs(m)) {
      CHECK(g.num_edges() == m);
      for (int v = 0; v < g.num_vertices(); ++v) CHECK(g.degree(v) > 0);
      CHECK(keys.insert(canonical_key(g)).second);
    }
  }
}

TEST_CASE("hereditary filter equals post-filtering") {
  const Graph tri = complete(3);
  EnumerationOptions opts;
  opts.keep = [&](const Graph& g) { return !contains_subgraph(g, tri); };
  for (int m = 1; m <= 8; ++m) {
    std::size_t filtered = 0;
    for (const Graph& g : enumerate_graphs(m)) {
      if (!oracle::contains(g, tri)) ++filtered;
    }
    const auto pruned = enumerate_graphs(m, opts);
    CHECK(pruned.size() == filtered);
    for (const Graph& g : pruned) CHECK_FALSE(oracle::contains(g, tri));
  }
}

TEST_CASE("output does not depend on worker count") {
  EnumerationOptions one;
  EnumerationOptions three;
  three.workers = 3;
  const auto a = enumerate_graphs(8, one);
  const auto b = enumerate_graphs(8, three);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(enumerate_graphs(-1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_graphs(kMaxEnumerationEdges + 1), std::length_error);
  CHECK_THROWS_AS(enumerate_graphs_on_vertices(kMaxEnumerationVertices + 1), std::length_error);
  CHECK(default_workers() >= 1);
}

TEST_CASE("edge-mode output on 7 vertices matches K7 edge-subset dedup at m = 6") {
  // Every 6-subset of E(K7) without isolated vertices, deduplicated by brute force.
  constexpr int m = 6;
  const auto all = complete(7).edges();
  std::set<std::vector<bool>> seen;
  std::vector<int> pick(all.size(), 0);
  std::fill(pick.end() - m, pick.end(), 1);
  do {
    Graph g(7);
    for (std::size_t i = 0; i < all.size(); ++i)
      if (pick[i]) g.add_edge(all[i].u, all[i].v);
    bool isolated = false;
    for (int v = 0; v < 7; ++v) isolated = isolated || g.degree(v) == 0;
    if (!isolated) seen.insert(oracle::min_labeling_code(g));
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::size_t got = 0;
  for (const Graph& g : enumerate_graphs(m)) got += g.num_vertices() == 7;
  CHECK(got == seen.size());
}
