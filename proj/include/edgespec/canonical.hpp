#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "edgespec/graph.hpp"

namespace edgespec {

/// Largest connected component the exact canonical labeller accepts.
inline constexpr int kExactCanonicalCap = 16;

/// Label-invariant identifier: equal for isomorphic graphs, distinct
/// otherwise. Totally ordered.
struct CanonicalKey {
  std::vector<std::uint64_t> words;

  auto operator<=>(const CanonicalKey&) const = default;
  std::string hex() const;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept;
};

struct CanonicalForm {
  CanonicalKey key;
  /// labeling[v] is the canonical position of vertex v.
  std::vector<int> labeling;
};

/// Canonical labelling by colour refinement plus individualisation, with
/// twin and automorphism pruning. Components are labelled separately and
/// concatenated in key order, so only components (not the whole graph) are
/// subject to kExactCanonicalCap; a larger component throws
/// std::length_error (use invariant_hash + are_isomorphic instead).
CanonicalForm canonical_form(const Graph& g);
CanonicalKey canonical_key(const Graph& g);
Graph canonical_graph(const Graph& g);

/// Weisfeiler-Leman colour-refinement hash. Isomorphic graphs hash equal;
/// collisions are possible, so pair with are_isomorphic.
std::uint64_t invariant_hash(const Graph& g);

/// Exact isomorphism test without a size cap (backtracking over refined
/// colour classes).
bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace edgespec
