#include <doctest.h>

#include <map>
#include <sstream>
#include <stdexcept>

#include "edgespec/canonical.hpp"
#include "edgespec/generators.hpp"
#include "edgespec/graph.hpp"
#include "edgespec/io.hpp"
#include "oracles.hpp"

using namespace edgespec;

TEST_CASE("basic edge operations") {
  Graph g(5);
  CHECK(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(1, 0));
  CHECK(g.add_edge(3, 4));
  CHECK(g.num_edges() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK(g.remove_edge(0, 1));
  CHECK_FALSE(g.remove_edge(0, 1));
  CHECK(g.num_edges() == 1);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 5), std::invalid_argument);
}

TEST_CASE("wide rows past one word") {
  Graph g(200);
  g.add_edge(3, 130);
  g.add_edge(199, 64);
  CHECK(g.words_per_row() == 4);
  CHECK(g.neighbors(130) == std::vector<int>{3});
  CHECK(g.degree(64) == 1);
  const auto e = g.edges();
  REQUIRE(e.size() == 2);
  CHECK(e[0] == Edge{3, 130});
  CHECK(e[1] == Edge{64, 199});
}

TEST_CASE("join, union, blow-up, complement") {
  const Graph j = join(empty_graph(2), empty_graph(3));
  CHECK(j == complete_bipartite(2, 3));
  CHECK(disjoint_union(complete(3), complete(2)).num_edges() == 4);
  const Graph b = blow_up(complete(3), 2);
  CHECK(b.num_vertices() == 6);
  CHECK(b.num_edges() == 12);
  CHECK(complement(complete(4)).num_edges() == 0);
  CHECK(complement(cycle(5)).num_edges() == 5);
}

TEST_CASE("components and two-colourings") {
  const Graph g = disjoint_union(cycle(4), path(3));
  CHECK(connected_components(g).size() == 2);
  CHECK_FALSE(is_connected(g));
  CHECK(is_bipartite(g));
  CHECK_FALSE(is_bipartite(cycle(5)));
  CHECK(is_star(star(4)));
  CHECK_FALSE(is_star(path(4)));
  const auto col = two_coloring(cycle(6));
  REQUIRE(col);
  for (const Edge& e : cycle(6).edges()) CHECK((*col)[e.u] != (*col)[e.v]);
}

TEST_CASE("labelled edit distance is the symmetric difference") {
  Graph g = complete_bipartite(3, 3);
  Graph h = g;
  h.remove_edge(0, 3);
  h.add_edge(0, 1);
  CHECK(edit_distance_labeled(g, h) == 2);
  CHECK(edit_distance_labeled(star(9), extend_to(complete_bipartite(5, 5), 10)) ==
        9 + 25 - 2 * 5);
}

TEST_CASE("edge-list and graph6 round trips") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    const int n = 1 + static_cast<int>(rng() % 70);
    const Graph g = oracle::random_graph(rng, n, 0.3);
    CHECK(from_graph6(to_graph6(g)) == g);
    CHECK(parse_edge_list(write_edge_list(g)) == g);
  }
  CHECK(to_graph6(complete(4)) == "C~");
  CHECK(from_graph6("C~") == complete(4));
  CHECK(to_graph6(Graph(0)) == "?");
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("C"), std::invalid_argument);
}

TEST_CASE("canonical key is invariant under relabelling") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(rng, n, 0.4);
    const Graph h = relabel(g, oracle::random_permutation(rng, n));
    CHECK(canonical_key(g) == canonical_key(h));
    CHECK(canonical_graph(g) == canonical_graph(h));
    CHECK(invariant_hash(g) == invariant_hash(h));
  }
}

TEST_CASE("canonical labeling maps onto the canonical graph") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_graph(rng, 9, 0.5);
    const CanonicalForm f = canonical_form(g);
    CHECK(relabel(g, f.labeling) == canonical_graph(g));
  }
}

TEST_CASE("canonical keys separate exactly the isomorphism classes on 6 vertices") {
  // 2^15 labelled graphs against the n!-permutation minimum code.
  std::map<std::vector<bool>, CanonicalKey> by_code;
  std::map<CanonicalKey, std::vector<bool>> by_key;
  bool consistent = true;
  for (std::uint32_t mask = 0; mask < (1U << 15); ++mask) {
    Graph g(6);
    int bit = 0;
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v, ++bit)
        if (mask >> bit & 1U) g.add_edge(u, v);
    const auto code = oracle::min_labeling_code(g);
    const auto key = canonical_key(g);
    auto [it, fresh] = by_code.emplace(code, key);
    if (!fresh && !(it->second == key)) consistent = false;
    auto [jt, fresh2] = by_key.emplace(key, code);
    if (!fresh2 && jt->second != code) consistent = false;
  }
  CHECK(consistent);
  CHECK(by_code.size() == 156);
}

TEST_CASE("large disconnected graphs canonicalize per component") {
  const Graph a = disjoint_union(cycle(14), path(15));
  std::mt19937_64 rng(9);
  const Graph b = relabel(a, oracle::random_permutation(rng, a.num_vertices()));
  CHECK(canonical_key(a) == canonical_key(b));
  CHECK_FALSE(canonical_key(a) == canonical_key(disjoint_union(cycle(15), path(14))));
  CHECK_THROWS_AS(canonical_key(cycle(kExactCanonicalCap + 1)), std::length_error);
}
