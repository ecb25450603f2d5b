#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace edgespec {

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1 stored as dense bitset rows.
///
/// Adjacency is kept symmetric and loop-free by every mutator, and the edge
/// count is maintained eagerly. Isolated vertices are kept explicitly.
class Graph {
 public:
  /// Upper bound on the vertex count of the dense representation. Larger
  /// instances go through SparseGraph.
  static constexpr int kMaxVertices = 20000;

  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph from an edge list; duplicate pairs (in either
  /// orientation) collapse. Throws std::invalid_argument on loops and
  /// out-of-range endpoints.
  static Graph from_edge_list(int n, std::span<const Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return m_; }

  bool has_edge(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  /// Returns true if the edge was new.
  bool add_edge(int u, int v);
  /// Returns true if the edge was present.
  bool remove_edge(int u, int v);

  int degree(int v) const;
  int max_degree() const;
  std::vector<int> degrees() const;
  std::vector<int> neighbors(int v) const;

  /// Adjacency row of v; bit u of word u/64 is set iff uv is an edge.
  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }
  int words_per_row() const { return words_; }

  /// All edges (u < v) in ascending lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_pair(int u, int v) const;

  int n_ = 0;
  int words_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> bits_;
};

template <typename F>
void for_each_bit(std::span<const std::uint64_t> words, F&& f) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t x = words[w];
    while (x != 0) {
      const int b = std::countr_zero(x);
      f(static_cast<int>(w * 64) + b);
      x &= x - 1;
    }
  }
}

/// Compressed adjacency lists, used where n is too large for dense rows.
struct SparseGraph {
  int n = 0;
  std::vector<std::size_t> offsets;  // size n + 1
  std::vector<int> targets;

  static SparseGraph from_edge_list(int n, std::span<const Edge> edges);
  std::size_t num_edges() const { return targets.size() / 2; }
  std::span<const int> neighbors(int v) const {
    return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
  }
};

SparseGraph to_sparse(const Graph& g);

/// Every vertex of g adjacent to every vertex of h; h's vertices follow g's.
Graph join(const Graph& g, const Graph& h);
/// Each vertex becomes an independent t-set, each edge a complete bipartite
/// K_{t,t}. Vertex v's copies are v*t .. v*t + t - 1.
Graph blow_up(const Graph& g, int t);
Graph disjoint_union(const Graph& g, const Graph& h);
/// Induced subgraph on the listed vertices, relabelled in list order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph complement(const Graph& g);
/// perm[old] = new.
Graph relabel(const Graph& g, std::span<const int> perm);
Graph remove_isolated(const Graph& g);
/// Appends isolated vertices so the result has n vertices.
Graph extend_to(const Graph& g, int n);
Graph remove_edge_copy(const Graph& g, Edge e);

/// Size of the symmetric difference of the edge sets under the identity
/// labelling; the smaller graph is padded with isolated vertices.
int edit_distance_labeled(const Graph& g, const Graph& h);

/// Components ordered by their smallest vertex; vertices ascending.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Proper 2-colouring (0/1 per vertex, lowest vertex of each component gets
/// 0), or nullopt when g has an odd cycle.
std::optional<std::vector<int>> two_coloring(const Graph& g);
bool is_bipartite(const Graph& g);

/// True for K_{1,t}, t >= 1, with no further vertices.
bool is_star(const Graph& g);

}  // namespace edgespec
