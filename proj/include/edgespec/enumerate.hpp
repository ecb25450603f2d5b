#pragma once

#include <functional>
#include <vector>

#include "edgespec/graph.hpp"

namespace edgespec {

inline constexpr int kMaxEnumerationEdges = 12;
inline constexpr int kMaxEnumerationVertices = 10;

struct EnumerationOptions {
  /// Hereditary filter: if it rejects a graph it must reject every graph
  /// containing it (e.g. "is F-free"). Rejected graphs are pruned together
  /// with their whole augmentation subtree.
  std::function<bool(const Graph&)> keep;
  /// Worker threads; the tree is split into units at depth two and the
  /// output order does not depend on this value.
  int workers = 1;
};

/// One representative per isomorphism class of graphs with exactly m edges
/// and no isolated vertices, generated by canonical edge augmentation.
/// Requires 0 <= m <= kMaxEnumerationEdges (std::length_error otherwise).
std::vector<Graph> enumerate_graphs(int m, const EnumerationOptions& opts = {});

/// One representative per isomorphism class of graphs on exactly n vertices
/// (isolated vertices allowed, any edge count). Requires
/// 0 <= n <= kMaxEnumerationVertices.
std::vector<Graph> enumerate_graphs_on_vertices(int n, const EnumerationOptions& opts = {});

/// Number of workers from the STL_WORKERS environment variable (default 1).
int default_workers();

}  // namespace edgespec
