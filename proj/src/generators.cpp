#include "edgespec/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace edgespec {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

int to_int(long long v, const char* what) {
  require(v >= 0 && v <= Graph::kMaxVertices, std::string(what) + " out of range");
  return static_cast<int>(v);
}

void add_path(Graph& g, int from, int to, int length, int& next) {
  int prev = from;
  for (int i = 1; i < length; ++i) {
    g.add_edge(prev, next);
    prev = next++;
  }
  g.add_edge(prev, to);
}

}  // namespace

SplitGraphSpec split_spec(int k, long long m) {
  require(k >= 1, "split graph: k must be positive");
  require(m > k, "split graph: requires k < m");
  const long long clique = static_cast<long long>(k) * (k - 1) / 2;
  require(m > clique, "split graph: requires m > C(k,2)");
  SplitGraphSpec s;
  s.k = k;
  s.m = m;
  s.t = (m - clique) / k;
  s.r = static_cast<int>((m - clique) % k);
  return s;
}

EdgeListGraph core_split_edges(const Graph& core, long long m) {
  const int v = core.num_vertices();
  require(v >= 1, "core split: empty core");
  const long long rest = m - core.num_edges();
  require(rest >= 0, "core split: m smaller than e(core)");
  const long long t = rest / v;
  const int r = static_cast<int>(rest % v);
  const long long n = v + t + (r > 0 ? 1 : 0);
  require(n <= 2'000'000'000LL, "core split: too many vertices");
  EdgeListGraph out;
  out.n = static_cast<int>(n);
  out.edges = core.edges();
  out.edges.reserve(static_cast<std::size_t>(m));
  for (long long j = 0; j < t; ++j) {
    for (int a = 0; a < v; ++a) out.edges.push_back({a, static_cast<int>(v + j)});
  }
  if (r > 0) {
    for (int a = 0; a < r; ++a) out.edges.push_back({a, out.n - 1});
  }
  return out;
}

EdgeListGraph split_graph_edges(int k, long long m) {
  split_spec(k, m);
  return core_split_edges(complete(k), m);
}

Graph split_graph(int k, long long m) {
  const auto e = split_graph_edges(k, m);
  return Graph::from_edge_list(e.n, e.edges);
}

double split_lambda_upper(int k, long long m) {
  const double radicand = 4.0 * static_cast<double>(m) - static_cast<double>(k) * k + 1.0;
  require(radicand >= 0, "split_lambda_upper: negative radicand 4m - k^2 + 1");
  return 0.5 * (static_cast<double>(k) - 1.0 + std::sqrt(radicand));
}

std::vector<int> turan_parts(int n, int r) {
  require(r >= 1, "turan: r must be positive");
  require(n >= 0, "turan: n must be nonnegative");
  std::vector<int> parts(r, n / r);
  for (int i = 0; i < n % r; ++i) ++parts[i];
  return parts;
}

Graph turan(int n, int r) {
  const auto parts = turan_parts(n, r);
  Graph g(n);
  std::vector<int> part_of;
  part_of.reserve(n);
  for (int i = 0; i < r; ++i) part_of.insert(part_of.end(), parts[i], i);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
    }
  }
  return g;
}

Graph complete_multipartite(std::span<const int> sizes) {
  require(!sizes.empty(), "complete_multipartite: no parts");
  long long n = 0;
  for (int s : sizes) {
    require(s >= 1, "complete_multipartite: part sizes must be positive");
    n += s;
  }
  Graph g(to_int(n, "vertex count"));
  std::vector<int> part_of;
  for (std::size_t i = 0; i < sizes.size(); ++i) part_of.insert(part_of.end(), sizes[i], static_cast<int>(i));
  for (int u = 0; u < g.num_vertices(); ++u) {
    for (int v = u + 1; v < g.num_vertices(); ++v) {
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
    }
  }
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete(int n) {
  require(n >= 0, "complete: negative order");
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_bipartite(int a, int b) {
  const int sizes[] = {a, b};
  return complete_multipartite(sizes);
}

Graph star(int t) {
  require(t >= 1, "star: needs at least one leaf");
  return complete_bipartite(1, t);
}

Graph path(int v) {
  require(v >= 1, "path: needs at least one vertex");
  Graph g(v);
  for (int i = 0; i + 1 < v; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  require(n >= 3, "cycle: needs at least three vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph matching(int v) {
  require(v >= 2 && v % 2 == 0, "matching: vertex count must be positive and even");
  Graph g(v);
  for (int i = 0; i < v; i += 2) g.add_edge(i, i + 1);
  return g;
}

Graph book(int r, int k) {
  require(r >= 1 && k >= 1, "book: r and k must be positive");
  return join(complete(r), empty_graph(k));
}

Graph wheel_even(int k) {
  require(k >= 1, "wheel_even: k must be positive");
  return join(complete(1), cycle(2 * k + 1));
}

Graph kst_plus(int s, int t) {
  require(s >= 2 && t >= 1, "kst_plus: needs s >= 2 and t >= 1");
  Graph g = complete_bipartite(s, t);
  g.add_edge(0, 1);
  return g;
}

Graph cycle_plus(int k) {
  require(k >= 4, "cycle_plus: needs k >= 4");
  Graph g = cycle(k);
  g.add_edge(0, 2);
  return g;
}

Graph theta(int r, int p, int q) {
  require(r >= 1 && p >= 1 && q >= 1, "theta: path lengths must be positive");
  require((r == 1) + (p == 1) + (q == 1) <= 1,
          "theta: more than one path of length 1 would create parallel edges");
  Graph g(r + p + q - 1);
  int next = 2;
  for (int len : {r, p, q}) add_path(g, 0, 1, len, next);
  return g;
}

Graph theta_multi(int t, int l) {
  require(t >= 1 && l >= 1, "theta_multi: t and l must be positive");
  require(l >= 2 || t == 1, "theta_multi: several paths of length 1 are parallel edges");
  Graph g(to_int(2LL + static_cast<long long>(t) * (l - 1), "vertex count"));
  int next = 2;
  for (int i = 0; i < t; ++i) add_path(g, 0, 1, l, next);
  return g;
}

Graph hypercube(int d) {
  require(d >= 0 && d <= 14, "hypercube: dimension must be in 0..14");
  const int n = 1 << d;
  Graph g(n);
  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < d; ++b) {
      const int u = v ^ (1 << b);
      if (v < u) g.add_edge(v, u);
    }
  }
  return g;
}

Graph grid(int t) {
  require(t >= 1, "grid: t must be positive");
  Graph g(to_int(static_cast<long long>(t) * t, "vertex count"));
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      const int v = i * t + j;
      if (j + 1 < t) g.add_edge(v, v + 1);
      if (i + 1 < t) g.add_edge(v, v + t);
    }
  }
  return g;
}

Graph prism(int l) {
  require(l >= 2, "prism: needs l >= 2");
  const int c = 2 * l;
  Graph g(2 * c);
  for (int i = 0; i < c; ++i) {
    g.add_edge(i, (i + 1) % c);
    g.add_edge(c + i, c + (i + 1) % c);
    g.add_edge(i, c + i);
  }
  return g;
}

Graph cycle_diagonals(int l) {
  require(l >= 2, "cycle_diagonals: needs l >= 2");
  Graph g = cycle(2 * l);
  for (int i = 0; i < l; ++i) g.add_edge(i, i + l);
  return g;
}

Graph subdivision(const Graph& f) {
  const auto edges = f.edges();
  Graph g(to_int(static_cast<long long>(f.num_vertices()) + static_cast<long long>(edges.size()),
                 "vertex count"));
  int next = f.num_vertices();
  for (const Edge& e : edges) {
    g.add_edge(e.u, next);
    g.add_edge(next, e.v);
    ++next;
  }
  return g;
}

Graph blowup_complete(int r, int t) {
  require(r >= 1, "blowup: r must be positive");
  return blow_up(complete(r), t);
}

Graph blowup_plus(int r, int t) {
  require(t >= 2, "blowup_plus: parts need at least two vertices");
  Graph g = blowup_complete(r, t);
  g.add_edge(0, 1);
  return g;
}

Graph four_layer(int n, int s) {
  require(s >= 2 && n > 2 * s, "four_layer: needs s >= 2 and n > 2s");
  const int outer = n + 1 - s;
  const int sizes[] = {outer, s, s, outer};
  Graph g(2 * outer + 2 * s);
  int start[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) start[i + 1] = start[i] + sizes[i];
  for (int layer = 0; layer < 3; ++layer) {
    for (int u = start[layer]; u < start[layer + 1]; ++u) {
      for (int v = start[layer + 1]; v < start[layer + 2]; ++v) g.add_edge(u, v);
    }
  }
  return g;
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "split",   "turan",      "multipartite", "book",          "wheel_even",      "kst_plus",
      "cycle",   "cycle_plus", "theta",        "theta_multi",   "hypercube",       "grid",
      "prism",   "cycle_diagonals", "subdivision", "path",      "matching",        "blowup",
      "blowup_plus", "complete", "complete_bipartite", "star", "four_layer"};
  return names;
}

Graph family(std::string_view name, std::span<const long long> params) {
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) {
      throw std::invalid_argument("family '" + std::string(name) + "' expects " +
                                  std::to_string(lo) +
                                  (hi != lo ? ".." + std::to_string(hi) : std::string()) +
                                  " parameters, got " + std::to_string(params.size()));
    }
  };
  auto p = [&](std::size_t i) { return to_int(params[i], "parameter"); };

  if (name == "split") {
    arity(2, 2);
    return split_graph(p(0), params[1]);
  }
  if (name == "turan") {
    arity(2, 2);
    return turan(p(0), p(1));
  }
  if (name == "multipartite") {
    arity(1, 64);
    std::vector<int> sizes;
    for (std::size_t i = 0; i < params.size(); ++i) sizes.push_back(p(i));
    return complete_multipartite(sizes);
  }
  if (name == "book") {
    arity(1, 2);
    return params.size() == 1 ? book(2, p(0)) : book(p(0), p(1));
  }
  if (name == "wheel_even") {
    arity(1, 1);
    return wheel_even(p(0));
  }
  if (name == "kst_plus") {
    arity(2, 2);
    return kst_plus(p(0), p(1));
  }
  if (name == "cycle") {
    arity(1, 1);
    return cycle(p(0));
  }
  if (name == "cycle_plus") {
    arity(1, 1);
    return cycle_plus(p(0));
  }
  if (name == "theta") {
    arity(3, 3);
    return theta(p(0), p(1), p(2));
  }
  if (name == "theta_multi") {
    arity(2, 2);
    return theta_multi(p(0), p(1));
  }
  if (name == "hypercube") {
    arity(1, 1);
    return hypercube(p(0));
  }
  if (name == "grid") {
    arity(1, 1);
    return grid(p(0));
  }
  if (name == "prism") {
    arity(1, 1);
    return prism(p(0));
  }
  if (name == "cycle_diagonals") {
    arity(1, 1);
    return cycle_diagonals(p(0));
  }
  if (name == "four_layer") {
    arity(2, 2);
    return four_layer(p(0), p(1));
  }
  if (name == "subdivision") {
    arity(1, 2);
    return params.size() == 1 ? subdivision(complete(p(0)))
                              : subdivision(complete_bipartite(p(0), p(1)));
  }
  if (name == "path") {
    arity(1, 1);
    return path(p(0));
  }
  if (name == "matching") {
    arity(1, 1);
    return matching(p(0));
  }
  if (name == "blowup") {
    arity(2, 2);
    return blowup_complete(p(0), p(1));
  }
  if (name == "blowup_plus") {
    arity(2, 2);
    return blowup_plus(p(0), p(1));
  }
  if (name == "complete") {
    arity(1, 1);
    return complete(p(0));
  }
  if (name == "complete_bipartite") {
    arity(2, 2);
    return complete_bipartite(p(0), p(1));
  }
  if (name == "star") {
    arity(1, 1);
    return star(p(0));
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

}  // namespace edgespec
