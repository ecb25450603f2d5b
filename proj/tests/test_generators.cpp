#include <doctest.h>

#include <stdexcept>

#include "edgespec/canonical.hpp"
#include "edgespec/generators.hpp"
#include "edgespec/graph.hpp"

using namespace edgespec;

TEST_CASE("S_{2,7} has five vertices and seven edges") {
  const Graph g = split_graph(2, 7);
  CHECK(g.num_vertices() == 5);
  CHECK(g.num_edges() == 7);
  const auto s = split_spec(2, 7);
  CHECK(s.t == 3);
  CHECK(s.r == 0);
  CHECK(are_isomorphic(g, join(complete(2), empty_graph(3))));
}

TEST_CASE("split graph shape") {
  for (int k = 1; k <= 6; ++k) {
    for (long long m = k * (k - 1) / 2 + 1; m <= 60; ++m) {
      if (k >= m) continue;
      const auto s = split_spec(k, m);
      CHECK(s.m - k * (k - 1) / 2 == k * s.t + s.r);
      const Graph g = split_graph(k, m);
      CHECK(g.num_edges() == m);
      CHECK(g.num_vertices() == k + s.t + (s.r > 0 ? 1 : 0));
      const auto el = split_graph_edges(k, m);
      CHECK(Graph::from_edge_list(el.n, el.edges) == g);
    }
  }
  CHECK_THROWS_AS(split_spec(4, 6), std::invalid_argument);
  CHECK_THROWS_AS(split_spec(0, 6), std::invalid_argument);
}

TEST_CASE("core split with K_k core is S_{k,m}") {
  const auto el = core_split_edges(complete(3), 40);
  CHECK(Graph::from_edge_list(el.n, el.edges) == split_graph(3, 40));
}

TEST_CASE("Turán graphs") {
  CHECK(turan(5, 2).num_edges() == 6);
  CHECK(turan(6, 3).num_edges() == 12);
  for (int r = 1; r <= 7; ++r) CHECK(turan(r, r).num_edges() == r * (r - 1) / 2);
  const auto parts = turan_parts(10, 3);
  CHECK(parts == std::vector<int>{4, 3, 3});
}

TEST_CASE("family sizes") {
  CHECK(book(2, 3).num_vertices() == 5);
  CHECK(book(2, 3).num_edges() == 7);
  CHECK(wheel_even(2).num_vertices() == 6);
  CHECK(wheel_even(2).num_edges() == 10);
  CHECK(kst_plus(3, 3).num_edges() == 10);
  CHECK(cycle_plus(5).num_edges() == 6);
  CHECK(theta(1, 3, 3).num_vertices() == 6);
  CHECK(theta(1, 3, 3).num_edges() == 7);
  CHECK(theta_multi(3, 2) == complete_bipartite(2, 3));
  CHECK(hypercube(3).num_edges() == 12);
  CHECK(grid(3).num_edges() == 12);
  CHECK(prism(3).num_edges() == 18);
  CHECK(are_isomorphic(prism(2), hypercube(3)));
  CHECK(cycle_diagonals(3).num_edges() == 9);
  CHECK(are_isomorphic(cycle_diagonals(3), complete_bipartite(3, 3)));
  CHECK(subdivision(complete(4)).num_vertices() == 10);
  CHECK(subdivision(complete(4)).num_edges() == 12);
  CHECK(blowup_plus(2, 3).num_edges() == 10);
  CHECK(four_layer(5, 2).num_vertices() == 12);
  CHECK(matching(6).num_edges() == 3);
  CHECK(star(4) == complete_bipartite(1, 4));
}

TEST_CASE("family dispatcher") {
  const long long p33[] = {3, 3};
  CHECK(family("kst_plus", p33) == kst_plus(3, 3));
  const long long p5[] = {5};
  CHECK(family("cycle", p5) == cycle(5));
  CHECK_THROWS_AS(family("cycle", {}), std::invalid_argument);
  CHECK_THROWS_AS(family("nope", p5), std::invalid_argument);
  for (const auto& name : family_names()) CHECK_FALSE(name.empty());
}

TEST_CASE("theta and diagonal-cycle identities") {
  CHECK(canonical_key(theta(1, 2, 2)) == canonical_key(remove_edge_copy(complete(4), Edge{0, 1})));
  for (int l = 2; l <= 8; ++l) {
    const Graph g = cycle_diagonals(l);
    CHECK(g.num_vertices() == 2 * l);
    CHECK(g.num_edges() == 3 * l);
    CHECK(is_bipartite(g) == (l % 2 == 1));
  }
}

TEST_CASE("degree sum equals twice the edge count") {
  for (const Graph& g : {split_graph(3, 20), kst_plus(3, 4), hypercube(4), cycle_diagonals(5),
                         theta(2, 3, 4), four_layer(5, 2), turan(11, 4)}) {
    int sum = 0;
    for (int v = 0; v < g.num_vertices(); ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.num_edges());
  }
}
