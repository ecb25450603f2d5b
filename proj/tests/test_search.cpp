#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "edgespec/canonical.hpp"
#include "edgespec/forbidden.hpp"
#include "edgespec/generators.hpp"
#include "edgespec/search.hpp"
#include "oracles.hpp"

using namespace edgespec;

TEST_CASE("triangle-free bound and equality set for small m") {
  for (const NikiforovRow& row : verify_nikiforov(2, 1, 7)) {
    CHECK(row.holds());
    CHECK(row.max_lambda * row.max_lambda <= row.m + 1e-8);
  }
  const auto row4 = verify_nikiforov(2, 4, 4).front();
  std::vector<CanonicalKey> want = {canonical_key(complete_bipartite(2, 2)),
                                    canonical_key(star(4))};
  std::sort(want.begin(), want.end());
  CHECK(row4.equality == want);
}

TEST_CASE("K4-free equality at K3") {
  const auto rows = verify_nikiforov(3, 3, 3);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].holds());
  CHECK(rows[0].equality == std::vector<CanonicalKey>{canonical_key(complete(3))});
}

TEST_CASE("C4-free maximizer at m = 10 is the star, but not below") {
  SearchOptions opts;
  opts.bound = std::sqrt(10.0);
  const SearchRecord r = spectral_extremal(cycle(4), 10, opts);
  CHECK(r.verdict == Verdict::kBoundHolds);
  REQUIRE(r.maximizers.size() == 1);
  CHECK(r.maximizers[0].key == canonical_key(star(10)));
  CHECK(std::abs(r.max_lambda - std::sqrt(10.0)) < 1e-8);
  opts.bound = std::sqrt(8.0);
  CHECK(spectral_extremal(cycle(4), 8, opts).verdict == Verdict::kBoundViolated);
}

TEST_CASE("K_{3,3}+ at m = 8 matches an independent exhaustive search") {
  // Any graph with m = 8 on n >= 8 vertices has lambda <= sqrt(2m - n + 1) <= 3,
  // so the optimum above 3 lives on at most 7 vertices: try all 8-subsets of
  // the edges of K_7.
  const Graph f = kst_plus(3, 3);
  std::vector<Edge> all;
  for (int u = 0; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v) all.push_back({u, v});
  double best = 0.0;
  std::vector<int> pick = {0, 1, 2, 3, 4, 5, 6, 7};
  while (true) {
    Graph g(7);
    for (int i : pick) g.add_edge(all[i].u, all[i].v);
    const double l = oracle::lambda1(g);
    if (l > best + 1e-9 && !oracle::contains(g, f)) best = l;
    int i = 7;
    while (i >= 0 && pick[i] == 21 - 8 + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < 8; ++j) pick[j] = pick[j - 1] + 1;
  }
  CHECK(best > 3.0);
  const SearchRecord r = spectral_extremal(f, 8);
  CHECK(std::abs(r.max_lambda - best) < 1e-8);
  CHECK(r.max_lambda > split_lambda_upper(2, 8));
  const StructureReport s = verify_structure(f, 8);
  REQUIRE(s.entries.size() == 1);
  CHECK(s.entries[0].graph.num_vertices() == 5);
  CHECK(s.entries[0].shape == Shape::kUnmatched);
}

TEST_CASE("B_2 at m = 6 prefers the bowtie; complete bipartite from m = 10") {
  const StructureReport s6 = verify_structure(book(2, 2), 6);
  CHECK(std::abs(s6.max_lambda - (1.0 + std::sqrt(17.0)) / 2.0) < 1e-8);
  const StructureReport s10 = verify_structure(book(2, 2), 10);
  CHECK(s10.all_matched());
  for (const auto& e : s10.entries) CHECK(e.shape == Shape::kCompleteBipartite);
}

TEST_CASE("split-core recognition") {
  const Graph f = kst_plus(3, 3);
  const auto afam = a_family(f);
  const auto core = find_split_core(split_graph(2, 20), f, afam);
  REQUIRE(core);
  CHECK(core->size() == 2);
  CHECK(is_complete_bipartite(complete_bipartite(3, 4)));
  CHECK_FALSE(is_complete_bipartite(path(4)));
}

TEST_CASE("asymptotic deviation") {
  // For odd m, S_{2,m} has no partial vertex and (lambda - sqrt m - 1/2) sqrt m
  // tends to -3/8; for even m the partial vertex pulls it to -5/8. Values frozen
  // from an independent 50-digit quotient-matrix computation.
  const long long odd[] = {1001, 100001};
  const AsymptoticReport a = verify_asymptotic(kst_plus(3, 3), odd);
  CHECK_FALSE(a.complete_bipartite_regime);
  CHECK(a.ratio == Ratio(1, 2));
  CHECK(std::abs(a.rows[0].deviation - (-0.375070268585)) < 1e-7);
  CHECK(std::abs(a.rows[1].deviation - (-0.375000703121)) < 1e-6);
  CHECK(a.holds());
  const long long even[] = {100, 100000};
  const AsymptoticReport b = verify_asymptotic(kst_plus(3, 3), even);
  CHECK(std::abs(b.rows[0].deviation - (-0.625907291977)) < 1e-8);
  CHECK(std::abs(b.rows[1].deviation - (-0.625000710973)) < 1e-6);
  CHECK_FALSE(b.holds());
  const long long ms[] = {100};
  CHECK(verify_asymptotic(cycle(4), ms).complete_bipartite_regime);
  CHECK_FALSE(verify_asymptotic(complete_bipartite(3, 3), ms).complete_bipartite_regime);
}

TEST_CASE("Table 1 instances") {
  CHECK(table1_instances().size() == 26);
  for (const auto& inst : table1_instances()) {
    const Table1Report r = table1_check(inst.family, inst.params, 100);
    CHECK_MESSAGE(r.pass(), inst.row);
  }
  const long long c6[] = {6};
  CHECK(table1_row("cycle", c6).second == 2);
}

TEST_CASE("second-eigenvalue probe for r = 2") {
  for (const BnRow& row : conjecture_bn_probe(2, 1, 6)) CHECK(row.holds());
  CHECK_FALSE(conjecture_bn_probe(2, 1, 1).front().max_excess);
}

TEST_CASE("onset probe reports but does not assert") {
  const OnsetReport r = split_extremality_onset(kst_plus(3, 3), 2, 3, 8);
  CHECK(r.rows.size() == 6);
  CHECK(r.rows[0].split_unique);
  CHECK_FALSE(r.onset);
}

TEST_CASE("verdicts") {
  SearchOptions opts;
  opts.bound = 1.0;
  CHECK(spectral_extremal(complete(3), 3, opts).verdict == Verdict::kBoundViolated);
  CHECK(spectral_extremal(complete(3), 3).verdict == Verdict::kNoBound);
  CHECK(to_string(Verdict::kBoundHolds) == "bound-holds");
}

TEST_CASE("maximum spectral radius is non-decreasing in m") {
  for (const Graph& f : {cycle(4), complete(3)}) {
    double prev = 0.0;
    for (int m = 1; m <= 10; ++m) {
      const double cur = spectral_extremal(f, m).max_lambda;
      CHECK(cur >= prev - 1e-9);
      prev = cur;
    }
  }
}

TEST_CASE("structure check rejects F that is not almost bipartite") {
  CHECK_THROWS_AS(verify_structure(wheel_even(2), 6), std::domain_error);
  CHECK_THROWS_AS(verify_structure(star(3), 6), std::domain_error);
}
