#include "edgespec/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace edgespec {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

struct SmallGraph {
  int n = 0;
  std::array<Mask, 64> adj{};
};

// Splits cells until the ordered partition is equitable. Sub-cells are
// ordered by neighbour count, so the result is label-equivariant.
void refine(const SmallGraph& g, std::vector<Mask>& cells) {
  std::array<int, 64> count{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < cells.size(); ++w) {
      const Mask splitter = cells[w];
      for (std::size_t x = 0; x < cells.size(); ++x) {
        const Mask cell = cells[x];
        if ((cell & (cell - 1)) == 0) continue;
        int lo = 65;
        int hi = -1;
        for (Mask r = cell; r != 0; r &= r - 1) {
          const int v = std::countr_zero(r);
          count[v] = std::popcount(g.adj[v] & splitter);
          lo = std::min(lo, count[v]);
          hi = std::max(hi, count[v]);
        }
        if (lo == hi) continue;
        std::vector<Mask> parts;
        for (int c = lo; c <= hi; ++c) {
          Mask p = 0;
          for (Mask r = cell; r != 0; r &= r - 1) {
            const int v = std::countr_zero(r);
            if (count[v] == c) p |= bit(v);
          }
          if (p != 0) parts.push_back(p);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), parts.begin(), parts.end());
        x += parts.size() - 1;
        changed = true;
      }
    }
  }
}

class Labeller {
 public:
  explicit Labeller(const SmallGraph& g) : g_(g) {
    for (int u = 0; u < g.n; ++u) {
      for (int v = 0; v < g.n; ++v) {
        if (u != v && (g.adj[u] & ~bit(v)) == (g.adj[v] & ~bit(u))) twins_[u] |= bit(v);
      }
    }
  }

  void run() {
    std::vector<Mask> cells{g_.n == 64 ? ~Mask{0} : bit(g_.n) - 1};
    std::vector<int> path;
    search(std::move(cells), path);
  }

  const std::vector<Mask>& certificate() const { return best_cert_; }
  const std::vector<int>& labeling() const { return best_lab_; }

 private:
  void search(std::vector<Mask> cells, std::vector<int>& path) {
    refine(g_, cells);
    if (static_cast<int>(cells.size()) == g_.n) {
      leaf(cells);
      return;
    }
    std::size_t t = 0;
    while ((cells[t] & (cells[t] - 1)) == 0) ++t;
    const Mask target = cells[t];
    std::vector<int> tried;
    for (Mask r = target; r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      if ((twins_[v] & target & (bit(v) - 1)) != 0) continue;
      if (same_orbit_as_tried(v, tried, path)) continue;
      tried.push_back(v);
      std::vector<Mask> child = cells;
      child[t] = bit(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(t) + 1, target & ~bit(v));
      path.push_back(v);
      search(std::move(child), path);
      path.pop_back();
    }
  }

  // Orbits of the group generated by the known automorphisms that fix the
  // current individualisation path pointwise.
  bool same_orbit_as_tried(int v, const std::vector<int>& tried,
                           const std::vector<int>& path) const {
    if (tried.empty() || autos_.empty()) return false;
    std::array<int, 64> parent{};
    std::iota(parent.begin(), parent.begin() + g_.n, 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gamma : autos_) {
      bool fixes = true;
      for (int p : path) {
        if (gamma[p] != p) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < g_.n; ++x) {
        const int a = find(x);
        const int b = find(gamma[x]);
        if (a != b) parent[a] = b;
      }
    }
    if (!any) return false;
    const int root = find(v);
    for (int u : tried) {
      if (find(u) == root) return true;
    }
    return false;
  }

  void leaf(const std::vector<Mask>& cells) {
    std::vector<int> pos(g_.n);
    for (std::size_t i = 0; i < cells.size(); ++i) pos[std::countr_zero(cells[i])] = static_cast<int>(i);
    std::vector<Mask> cert(g_.n, 0);
    for (int v = 0; v < g_.n; ++v) {
      Mask row = 0;
      for (Mask r = g_.adj[v]; r != 0; r &= r - 1) row |= bit(pos[std::countr_zero(r)]);
      cert[pos[v]] = row;
    }
    if (best_lab_.empty() || cert > best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = std::move(pos);
      return;
    }
    if (cert == best_cert_) {
      std::vector<int> inv(g_.n);
      for (int v = 0; v < g_.n; ++v) inv[best_lab_[v]] = v;
      std::vector<int> gamma(g_.n);
      bool identity = true;
      for (int v = 0; v < g_.n; ++v) {
        gamma[v] = inv[pos[v]];
        identity = identity && gamma[v] == v;
      }
      if (!identity) autos_.push_back(std::move(gamma));
    }
  }

  const SmallGraph& g_;
  std::array<Mask, 64> twins_{};
  std::vector<Mask> best_cert_;
  std::vector<int> best_lab_;
  std::vector<std::vector<int>> autos_;
};

struct ComponentForm {
  std::vector<int> vertices;  // original labels
  std::vector<Mask> cert;
  std::vector<int> lab;  // local index -> local canonical position
};

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 29);
}

// Stable colour refinement on an arbitrary graph; returns dense colours that
// depend only on the isomorphism type of (g, initial colours).
std::vector<int> wl_colors(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  for (int round = 0; round <= n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{color[v]};
      for_each_bit(g.row(v), [&](int u) { s.push_back(color[u]); });
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& [s, v] : sig) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) color[v] = ids[sig[v].first];
    if (next == classes) break;
    classes = next;
  }
  return color;
}

}  // namespace

std::string CanonicalKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(words.size() * 16);
  for (std::uint64_t w : words) {
    for (int shift = 60; shift >= 0; shift -= 4) out.push_back(kDigits[(w >> shift) & 15]);
  }
  return out;
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& k) const noexcept {
  std::uint64_t h = 0x12345678ULL;
  for (std::uint64_t w : k.words) h = mix(h, w);
  return static_cast<std::size_t>(h);
}

CanonicalForm canonical_form(const Graph& g) {
  const auto comps = connected_components(g);
  std::vector<ComponentForm> forms;
  forms.reserve(comps.size());
  for (const auto& comp : comps) {
    const int s = static_cast<int>(comp.size());
    if (s > kExactCanonicalCap) {
      throw std::length_error("canonical_key: component of order " + std::to_string(s) +
                              " exceeds the exact cap of " +
                              std::to_string(kExactCanonicalCap) +
                              "; use invariant_hash with are_isomorphic instead");
    }
    ComponentForm f;
    f.vertices = comp;
    if (s == 1) {
      f.cert = {0};
      f.lab = {0};
    } else {
      SmallGraph small;
      small.n = s;
      std::vector<int> local(g.num_vertices(), -1);
      for (int i = 0; i < s; ++i) local[comp[i]] = i;
      for (int i = 0; i < s; ++i) {
        for_each_bit(g.row(comp[i]), [&](int u) { small.adj[i] |= bit(local[u]); });
      }
      Labeller lab(small);
      lab.run();
      f.cert = lab.certificate();
      f.lab = lab.labeling();
    }
    forms.push_back(std::move(f));
  }
  std::sort(forms.begin(), forms.end(), [](const ComponentForm& a, const ComponentForm& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() > b.vertices.size();
    return a.cert > b.cert;
  });

  CanonicalForm out;
  out.labeling.assign(g.num_vertices(), -1);
  out.key.words = {static_cast<std::uint64_t>(g.num_vertices()),
                   static_cast<std::uint64_t>(g.num_edges()),
                   static_cast<std::uint64_t>(forms.size())};
  int offset = 0;
  for (const auto& f : forms) {
    const int s = static_cast<int>(f.vertices.size());
    out.key.words.push_back(static_cast<std::uint64_t>(s));
    out.key.words.insert(out.key.words.end(), f.cert.begin(), f.cert.end());
    for (int i = 0; i < s; ++i) out.labeling[f.vertices[i]] = offset + f.lab[i];
    offset += s;
  }
  return out;
}

CanonicalKey canonical_key(const Graph& g) { return canonical_form(g).key; }

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_form(g).labeling); }

std::uint64_t invariant_hash(const Graph& g) {
  const auto color = wl_colors(g);
  std::vector<std::uint64_t> sig;
  sig.reserve(color.size());
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<int> nb;
    for_each_bit(g.row(v), [&](int u) { nb.push_back(color[u]); });
    std::sort(nb.begin(), nb.end());
    std::uint64_t h = mix(0x51ed27ULL, static_cast<std::uint64_t>(g.degree(v)));
    for (int c : nb) h = mix(h, static_cast<std::uint64_t>(c));
    sig.push_back(h);
  }
  std::sort(sig.begin(), sig.end());
  std::uint64_t h = mix(static_cast<std::uint64_t>(g.num_vertices()),
                        static_cast<std::uint64_t>(g.num_edges()));
  for (std::uint64_t s : sig) h = mix(h, s);
  return h;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  const int n = g.num_vertices();
  if (n != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
  if (n == 0) return true;
  // Colours computed on the disjoint union are comparable across g and h.
  const auto color = wl_colors(disjoint_union(g, h));
  std::vector<int> cg(color.begin(), color.begin() + n);
  std::vector<int> ch(color.begin() + n, color.end());
  {
    auto a = cg;
    auto b = ch;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  // Map g's vertices in BFS order so each has mapped neighbours early.
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::size_t head = order.size();
    order.push_back(s);
    for (; head < order.size(); ++head) {
      for_each_bit(g.row(order[head]), [&](int u) {
        if (!seen[u]) {
          seen[u] = 1;
          order.push_back(u);
        }
      });
    }
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> extend = [&](int depth) -> bool {
    if (depth == n) return true;
    const int v = order[depth];
    for (int w = 0; w < n; ++w) {
      if (used[w] || ch[w] != cg[v]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const int u = order[d];
        ok = g.has_edge(u, v) == h.has_edge(map[u], w);
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (extend(depth + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  return extend(0);
}

}  // namespace edgespec
