#include "edgespec/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace edgespec {

namespace {

int words_for(int n) { return (n + 63) / 64; }

void check_size(long long n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > Graph::kMaxVertices) {
    throw std::length_error("vertex count " + std::to_string(n) +
                            " exceeds dense representation cap " +
                            std::to_string(Graph::kMaxVertices));
  }
}

}  // namespace

Graph::Graph(int n) : n_(n), words_(words_for(n)) {
  check_size(n);
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") has an endpoint outside 0.." + std::to_string(n_ - 1));
  }
  if (u == v) {
    throw std::invalid_argument("loop at vertex " + std::to_string(u) + " rejected");
  }
}

bool Graph::add_edge(int u, int v) {
  check_pair(u, v);
  if (has_edge(u, v)) return false;
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  ++m_;
  return true;
}

bool Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  if (!has_edge(u, v)) return false;
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
  --m_;
  return true;
}

int Graph::degree(int v) const {
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for_each_bit(row(v), [&](int u) { out.push_back(u); });
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for_each_bit(row(u), [&](int v) {
      if (u < v) out.push_back({u, v});
    });
  }
  return out;
}

SparseGraph SparseGraph::from_edge_list(int n, std::span<const Edge> edges) {
  std::vector<Edge> clean;
  clean.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) {
      throw std::invalid_argument("invalid edge for sparse graph");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    clean.push_back(e);
  }
  std::sort(clean.begin(), clean.end());
  clean.erase(std::unique(clean.begin(), clean.end()), clean.end());

  SparseGraph s;
  s.n = n;
  s.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : clean) {
    ++s.offsets[e.u + 1];
    ++s.offsets[e.v + 1];
  }
  for (int v = 0; v < n; ++v) s.offsets[v + 1] += s.offsets[v];
  s.targets.resize(clean.size() * 2);
  std::vector<std::size_t> fill(s.offsets.begin(), s.offsets.end() - 1);
  for (const Edge& e : clean) {
    s.targets[fill[e.u]++] = e.v;
    s.targets[fill[e.v]++] = e.u;
  }
  return s;
}

SparseGraph to_sparse(const Graph& g) {
  const auto e = g.edges();
  return SparseGraph::from_edge_list(g.num_vertices(), e);
}

Graph join(const Graph& g, const Graph& h) {
  const int a = g.num_vertices();
  const int b = h.num_vertices();
  check_size(static_cast<long long>(a) + b);
  Graph out(a + b);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) out.add_edge(a + e.u, a + e.v);
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) out.add_edge(u, a + v);
  }
  return out;
}

Graph blow_up(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("blow-up factor must be positive");
  check_size(static_cast<long long>(g.num_vertices()) * t);
  Graph out(g.num_vertices() * t);
  for (const Edge& e : g.edges()) {
    for (int i = 0; i < t; ++i) {
      for (int j = 0; j < t; ++j) out.add_edge(e.u * t + i, e.v * t + j);
    }
  }
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int a = g.num_vertices();
  check_size(static_cast<long long>(a) + h.num_vertices());
  Graph out(a + h.num_vertices());
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) out.add_edge(a + e.u, a + e.v);
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  Graph out(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (vertices[i] == vertices[j]) {
        throw std::invalid_argument("induced_subgraph: repeated vertex");
      }
      if (g.has_edge(vertices[i], vertices[j])) out.add_edge(i, j);
    }
  }
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.num_vertices();
  Graph out(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.num_vertices()) {
    throw std::invalid_argument("relabel: permutation size mismatch");
  }
  Graph out(g.num_vertices());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

Graph remove_isolated(const Graph& g) {
  std::vector<int> keep;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 0) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Graph extend_to(const Graph& g, int n) {
  if (n < g.num_vertices()) throw std::invalid_argument("extend_to: cannot shrink");
  Graph out(n);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  return out;
}

Graph remove_edge_copy(const Graph& g, Edge e) {
  Graph out = g;
  out.remove_edge(e.u, e.v);
  return out;
}

int edit_distance_labeled(const Graph& g, const Graph& h) {
  const int n = std::max(g.num_vertices(), h.num_vertices());
  const Graph a = g.num_vertices() == n ? g : extend_to(g, n);
  const Graph b = h.num_vertices() == n ? h : extend_to(h, n);
  int diff = 0;
  for (int v = 0; v < n; ++v) {
    const auto ra = a.row(v);
    const auto rb = b.row(v);
    for (std::size_t w = 0; w < ra.size(); ++w) diff += std::popcount(ra[w] ^ rb[w]);
  }
  return diff / 2;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for_each_bit(g.row(v), [&](int u) {
        if (comp[u] < 0) {
          comp[u] = id;
          stack.push_back(u);
        }
      });
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> color(n, -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      bool ok = true;
      for_each_bit(g.row(v), [&](int u) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          ok = false;
        }
      });
      if (!ok) return std::nullopt;
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

bool is_star(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 2 || g.num_edges() != n - 1) return false;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) return true;
  }
  return false;
}

}  // namespace edgespec
