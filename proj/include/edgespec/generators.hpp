#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgespec/graph.hpp"

namespace edgespec {

/// m - C(k,2) = k*t + r with 0 <= r < k.
struct SplitGraphSpec {
  int k = 0;
  long long m = 0;
  long long t = 0;
  int r = 0;
};

/// Validates 1 <= k < m and m > C(k,2). Throws std::invalid_argument.
SplitGraphSpec split_spec(int k, long long m);

/// Vertex count plus edge list, for shapes too large for dense rows.
struct EdgeListGraph {
  int n = 0;
  std::vector<Edge> edges;
};

/// S_{k,m}: K_k on 0..k-1 joined to t independent vertices, plus (when
/// r >= 1) one more vertex adjacent to clique vertices 0..r-1. No extra
/// vertex is added when r == 0.
Graph split_graph(int k, long long m);
EdgeListGraph split_graph_edges(int k, long long m);

/// The same shape with an arbitrary core: `core` on vertices 0..v-1, t
/// vertices complete to the core, and one vertex adjacent to the r lowest
/// core vertices, where m - e(core) = v*t + r. With core = K_k this is
/// exactly split_graph(k, m).
EdgeListGraph core_split_edges(const Graph& core, long long m);

/// (k - 1 + sqrt(4m - k^2 + 1)) / 2. Throws when the radicand is negative.
double split_lambda_upper(int k, long long m);

/// Part sizes of T_{n,r}: the first n mod r parts are one larger.
std::vector<int> turan_parts(int n, int r);
Graph turan(int n, int r);
Graph complete_multipartite(std::span<const int> sizes);

Graph empty_graph(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph star(int t);
/// Path on v vertices.
Graph path(int v);
Graph cycle(int n);
/// Perfect matching on v vertices (v even).
Graph matching(int v);
/// B_{r,k}: k copies of K_{r+1} sharing a K_r.
Graph book(int r, int k);
/// W_{2k+2} = K_1 join C_{2k+1}.
Graph wheel_even(int k);
/// K_{s,t} plus one edge inside the part of size s (s >= 2).
Graph kst_plus(int s, int t);
/// C_k plus a chord between two vertices at distance two (k >= 4).
Graph cycle_plus(int k);
/// theta_{r,p,q}: three internally disjoint paths of the given lengths with
/// common endpoints 0 and 1. At most one length may be 1.
Graph theta(int r, int p, int q);
/// Theta_{t,l}: t internally disjoint paths of length l with common ends.
Graph theta_multi(int t, int l);
/// Q_d on {0,1}^d in binary-counter order.
Graph hypercube(int d);
/// t x t grid, row-major.
Graph grid(int t);
/// Two 2l-cycles joined by the matching i <-> 2l + i.
Graph prism(int l);
/// C_{2l} plus all l long diagonals.
Graph cycle_diagonals(int l);
/// 1-subdivision: one new vertex per edge, appended in edge order.
Graph subdivision(const Graph& f);
/// K_r[t].
Graph blowup_complete(int r, int t);
/// K_r[t] plus one edge inside the first part (t >= 2).
Graph blowup_plus(int r, int t);
/// Four layers of sizes n+1-s, s, s, n+1-s with complete bipartite graphs
/// between consecutive layers (s >= 2, n > 2s).
Graph four_layer(int n, int s);

/// Dispatch on the family tag used by the command line.
Graph family(std::string_view name, std::span<const long long> params);
const std::vector<std::string>& family_names();

}  // namespace edgespec
