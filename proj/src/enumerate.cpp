#include "edgespec/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "edgespec/canonical.hpp"
#include "parallel.hpp"

namespace edgespec {

namespace {

enum class Mode { kEdges, kVertices };

struct Node {
  Graph g;
  CanonicalKey key;
};

using EdgeInvariant = std::tuple<int, int, int>;

// Label-invariant preference for the edge to delete: low degrees first.
EdgeInvariant edge_invariant(const Graph& g, int a, int b) {
  const int da = g.degree(a);
  const int db = g.degree(b);
  int common = 0;
  const auto ra = g.row(a);
  const auto rb = g.row(b);
  for (std::size_t w = 0; w < ra.size(); ++w) common += std::popcount(ra[w] & rb[w]);
  return {-std::min(da, db), -std::max(da, db), -common};
}

class Enumerator {
 public:
  Enumerator(Mode mode, int last_depth, const EnumerationOptions& opts)
      : mode_(mode), last_depth_(last_depth), opts_(opts) {}

  bool emits(const Node& node) const {
    return mode_ == Mode::kVertices || node.g.num_edges() == last_depth_;
  }

  bool keep(const Graph& g) const { return !opts_.keep || opts_.keep(g); }

  std::vector<Node> children(const Node& parent) const {
    std::vector<Node> out;
    if (parent.g.num_edges() >= last_depth_) return out;
    std::set<CanonicalKey> seen;
    const int n = parent.g.num_vertices();
    auto consider = [&](Graph child, Edge added) {
      if (auto key = accept(parent, child, added)) {
        if (seen.insert(*key).second) out.push_back({std::move(child), std::move(*key)});
      }
    };
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (parent.g.has_edge(u, v)) continue;
        Graph child = parent.g;
        child.add_edge(u, v);
        consider(std::move(child), {u, v});
      }
    }
    if (mode_ == Mode::kEdges) {
      for (int u = 0; u < n; ++u) {
        Graph child = extend_to(parent.g, n + 1);
        child.add_edge(u, n);
        consider(std::move(child), {u, n});
      }
      Graph child = extend_to(parent.g, n + 2);
      child.add_edge(n, n + 1);
      consider(std::move(child), {n, n + 1});
    }
    return out;
  }

  void dfs(const Node& node, std::vector<Graph>& out) const {
    if (emits(node)) out.push_back(node.g);
    for (const Node& child : children(node)) dfs(child, out);
  }

 private:
  Graph strip(Graph g) const {
    return mode_ == Mode::kEdges ? remove_isolated(g) : g;
  }

  std::optional<CanonicalKey> accept(const Node& parent, const Graph& child,
                                     Edge added) const {
    const auto edges = child.edges();
    const EdgeInvariant mine = edge_invariant(child, added.u, added.v);
    std::vector<Edge> best;
    EdgeInvariant best_inv{};
    for (const Edge& e : edges) {
      const EdgeInvariant inv = edge_invariant(child, e.u, e.v);
      if (inv > mine) return std::nullopt;
      if (best.empty() || inv > best_inv) {
        best.clear();
        best_inv = inv;
      }
      if (inv == best_inv) best.push_back(e);
    }
    if (!keep(child)) return std::nullopt;
    CanonicalForm form = canonical_form(child);
    if (best.size() == 1) return std::move(form.key);

    const auto& lab = form.labeling;
    auto rank = [&](const Edge& e) {
      return std::pair{std::max(lab[e.u], lab[e.v]), std::min(lab[e.u], lab[e.v])};
    };
    Edge star = best.front();
    for (const Edge& e : best) {
      if (rank(e) > rank(star)) star = e;
    }
    if (rank(star) == rank(added)) return std::move(form.key);
    if (canonical_key(strip(remove_edge_copy(child, star))) != parent.key) return std::nullopt;
    return std::move(form.key);
  }

  Mode mode_;
  int last_depth_;
  const EnumerationOptions& opts_;
};

std::vector<Graph> run(Mode mode, const Graph& root, int last_depth,
                       const EnumerationOptions& opts) {
  Enumerator en(mode, last_depth, opts);
  std::vector<Graph> out;
  if (!en.keep(root)) return out;

  const Node start{root, canonical_key(root)};
  if (en.emits(start)) out.push_back(start.g);
  std::vector<Node> units;
  for (Node& a : en.children(start)) {
    if (en.emits(a)) out.push_back(a.g);
    for (Node& b : en.children(a)) units.push_back(std::move(b));
  }

  std::vector<std::vector<Graph>> results(units.size());
  detail::parallel_for(units.size(), opts.workers,
                       [&](std::size_t i) { en.dfs(units[i], results[i]); });
  for (auto& part : results) {
    for (auto& g : part) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int m, const EnumerationOptions& opts) {
  if (m < 0) throw std::invalid_argument("edge count must be nonnegative");
  if (m > kMaxEnumerationEdges) {
    throw std::length_error("exhaustive enumeration is capped at " +
                            std::to_string(kMaxEnumerationEdges) + " edges");
  }
  return run(Mode::kEdges, Graph(0), m, opts);
}

std::vector<Graph> enumerate_graphs_on_vertices(int n, const EnumerationOptions& opts) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  if (n > kMaxEnumerationVertices) {
    throw std::length_error("exhaustive enumeration is capped at " +
                            std::to_string(kMaxEnumerationVertices) + " vertices");
  }
  return run(Mode::kVertices, Graph(n), n * (n - 1) / 2, opts);
}

int default_workers() {
  if (const char* env = std::getenv("STL_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace edgespec
