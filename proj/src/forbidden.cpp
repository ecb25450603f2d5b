#include "edgespec/forbidden.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "edgespec/canonical.hpp"
#include "edgespec/enumerate.hpp"

namespace edgespec {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

std::vector<Mask> masks_of(const Graph& g, int cap, const char* what) {
  if (g.num_vertices() > cap) {
    throw std::length_error(std::string(what) + " is capped at " + std::to_string(cap) +
                            " vertices");
  }
  std::vector<Mask> adj(g.num_vertices(), 0);
  for (int v = 0; v < g.num_vertices(); ++v) adj[v] = g.row(v)[0];
  return adj;
}

Mask all_of(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

class Embedder {
 public:
  Embedder(const Graph& host, const Graph& pattern, bool induced)
      : host_(host), pattern_(pattern), induced_(induced), words_(host.words_per_row()) {
    host_deg_ = host.degrees();
    classify_twins();
    const int p = pattern.num_vertices();
    std::vector<int> deg = pattern.degrees();
    std::vector<bool> placed(p, false);
    for (int step = 0; step < p; ++step) {
      int best = -1;
      int best_links = -1;
      for (int v = 0; v < p; ++v) {
        if (placed[v] || (!induced && deg[v] == 0)) continue;
        int links = 0;
        for (int u : order_) links += pattern.has_edge(u, v) ? 1 : 0;
        if (links > best_links || (links == best_links && deg[v] > deg[best])) {
          best = v;
          best_links = links;
        }
      }
      if (best < 0) break;
      placed[best] = true;
      order_.push_back(best);
    }
    pdeg_.resize(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) pdeg_[i] = deg[order_[i]];
    image_.assign(p, -1);
    used_.assign(words_, 0);
    buffer_.assign(static_cast<std::size_t>(words_) * (order_.size() + 1), 0);
  }

  bool run() { return search(0); }

 private:
  void classify_twins() {
    const int n = host_.num_vertices();
    std::map<std::vector<std::uint64_t>, int> open_ids;
    std::map<std::vector<std::uint64_t>, int> closed_ids;
    open_id_.resize(n);
    closed_id_.resize(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::uint64_t> r(host_.row(v).begin(), host_.row(v).end());
      open_id_[v] = open_ids.emplace(r, static_cast<int>(open_ids.size())).first->second;
      r[v >> 6] |= bit(v & 63);
      closed_id_[v] = closed_ids.emplace(r, static_cast<int>(closed_ids.size())).first->second;
    }
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int pv = order_[depth];
    std::uint64_t* cand = buffer_.data() + depth * words_;
    const int n = host_.num_vertices();
    for (int w = 0; w < words_; ++w) {
      const int lo = w * 64;
      cand[w] = (n - lo >= 64 ? ~Mask{0} : bit(n - lo) - 1) & ~used_[w];
    }
    for (std::size_t i = 0; i < depth; ++i) {
      const int q = order_[i];
      const auto r = host_.row(image_[q]);
      if (pattern_.has_edge(pv, q)) {
        for (int w = 0; w < words_; ++w) cand[w] &= r[w];
      } else if (induced_) {
        for (int w = 0; w < words_; ++w) cand[w] &= ~r[w];
      }
    }
    std::vector<std::pair<int, int>> tried;
    for (int w = 0; w < words_; ++w) {
      Mask x = cand[w];
      while (x != 0) {
        const int h = w * 64 + std::countr_zero(x);
        x &= x - 1;
        if (host_deg_[h] < pdeg_[depth]) continue;
        const bool twin = std::any_of(tried.begin(), tried.end(), [&](const auto& t) {
          return t.first == open_id_[h] || t.second == closed_id_[h];
        });
        if (twin) continue;
        tried.emplace_back(open_id_[h], closed_id_[h]);
        image_[pv] = h;
        used_[h >> 6] |= bit(h & 63);
        const bool found = search(depth + 1);
        used_[h >> 6] &= ~bit(h & 63);
        if (found) return true;
      }
    }
    image_[pv] = -1;
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  bool induced_;
  int words_;
  std::vector<int> host_deg_;
  std::vector<int> open_id_;
  std::vector<int> closed_id_;
  std::vector<int> order_;
  std::vector<int> pdeg_;
  std::vector<int> image_;
  std::vector<std::uint64_t> used_;
  std::vector<std::uint64_t> buffer_;
};

bool embeds(const Graph& host, const Graph& pattern, bool induced) {
  const int p = pattern.num_vertices();
  if (p > kPatternCap) {
    throw std::length_error("subgraph patterns are capped at " + std::to_string(kPatternCap) +
                            " vertices");
  }
  if (p == 0) return true;
  if (p > host.num_vertices() || pattern.num_edges() > host.num_edges()) return false;
  std::vector<int> hd = host.degrees();
  std::vector<int> pd = pattern.degrees();
  std::sort(hd.rbegin(), hd.rend());
  std::sort(pd.rbegin(), pd.rend());
  for (int i = 0; i < p; ++i) {
    if (pd[i] > hd[i]) return false;
  }
  return Embedder(host, pattern, induced).run();
}

int max_clique(const std::vector<Mask>& adj, Mask cand, int size, int best) {
  if (cand == 0) return std::max(size, best);
  while (cand != 0) {
    if (size + std::popcount(cand) <= best) return best;
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    best = max_clique(adj, cand & adj[v], size + 1, best);
  }
  return std::max(size, best);
}

bool colorable(const std::vector<Mask>& adj, const std::vector<int>& order, std::size_t i,
               std::vector<Mask>& classes, int used, int k) {
  if (i == order.size()) return true;
  const int v = order[i];
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    if ((classes[c] & adj[v]) != 0) continue;
    classes[c] |= bit(v);
    const bool ok = colorable(adj, order, i + 1, classes, std::max(used, c + 1), k);
    classes[c] &= ~bit(v);
    if (ok) return true;
  }
  return false;
}

int greedy_colors(const std::vector<Mask>& adj, const std::vector<int>& order) {
  std::vector<Mask> classes;
  for (int v : order) {
    std::size_t c = 0;
    while (c < classes.size() && (classes[c] & adj[v]) != 0) ++c;
    if (c == classes.size()) classes.push_back(0);
    classes[c] |= bit(v);
  }
  return static_cast<int>(classes.size());
}

int chromatic_of_masks(const std::vector<Mask>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return 0;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(adj[a]) > std::popcount(adj[b]);
  });
  const int lower = max_clique(adj, all_of(n), 0, 0);
  const int upper = greedy_colors(adj, order);
  for (int k = lower; k < upper; ++k) {
    std::vector<Mask> classes(k, 0);
    if (colorable(adj, order, 0, classes, 0, k)) return k;
  }
  return upper;
}

void bron_kerbosch(const std::vector<Mask>& adj, Mask r, Mask p, Mask x, std::vector<Mask>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  int pivot = -1;
  int best = -1;
  for (Mask px = p | x; px != 0; px &= px - 1) {
    const int u = std::countr_zero(px);
    const int c = std::popcount(p & adj[u]);
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (Mask todo = p & ~adj[pivot]; todo != 0; todo &= todo - 1) {
    const int v = std::countr_zero(todo);
    bron_kerbosch(adj, r | bit(v), p & adj[v], x & adj[v], out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

std::vector<Mask> complement_masks(const std::vector<Mask>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<Mask> co(n);
  for (int v = 0; v < n; ++v) co[v] = all_of(n) & ~adj[v] & ~bit(v);
  return co;
}

}  // namespace

bool contains_subgraph(const Graph& host, const Graph& pattern) {
  return embeds(host, pattern, false);
}

bool contains_induced_subgraph(const Graph& host, const Graph& pattern) {
  return embeds(host, pattern, true);
}

int chromatic_number(const Graph& f) {
  return chromatic_of_masks(masks_of(f, kPatternCap, "chromatic number"));
}

bool is_color_critical(const Graph& f) {
  if (f.num_edges() == 0) throw std::invalid_argument("colour-criticality needs an edge");
  auto adj = masks_of(f, kPatternCap, "colour-criticality");
  const int chi = chromatic_of_masks(adj);
  for (const Edge& e : f.edges()) {
    adj[e.u] &= ~bit(e.v);
    adj[e.v] &= ~bit(e.u);
    const int reduced = chromatic_of_masks(adj);
    adj[e.u] |= bit(e.v);
    adj[e.v] |= bit(e.u);
    if (reduced < chi) return true;
  }
  return false;
}

bool is_almost_bipartite(const Graph& f) {
  if (f.num_vertices() > kPatternCap) {
    throw std::length_error("almost-bipartite test is capped at " + std::to_string(kPatternCap) +
                            " vertices");
  }
  if (is_bipartite(f)) return true;
  const auto edges = f.edges();
  return std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
    return is_bipartite(remove_edge_copy(f, e));
  });
}

int independence_number(const Graph& f) {
  const auto adj = masks_of(f, kIndependenceCap, "independence number");
  return max_clique(complement_masks(adj), all_of(f.num_vertices()), 0, 0);
}

int color_surplus(const Graph& f) {
  if (f.num_edges() == 0) throw std::invalid_argument("colour surplus needs an edge");
  const auto coloring = two_coloring(f);
  if (!coloring) throw std::domain_error("colour surplus undefined: graph is not bipartite");
  // Each component can be flipped independently, so the smallest class takes
  // the smaller side of every component.
  int sigma = 0;
  for (const auto& comp : connected_components(f)) {
    int ones = 0;
    for (int v : comp) ones += (*coloring)[v];
    sigma += std::min(ones, static_cast<int>(comp.size()) - ones);
  }
  return sigma;
}

std::vector<std::vector<int>> maximal_independent_sets(const Graph& f) {
  const auto adj = masks_of(f, kPatternCap, "maximal independent sets");
  std::vector<Mask> found;
  bron_kerbosch(complement_masks(adj), 0, all_of(f.num_vertices()), 0, found);
  std::vector<std::vector<int>> out;
  out.reserve(found.size());
  for (Mask s : found) {
    std::vector<int> set;
    for (; s != 0; s &= s - 1) set.push_back(std::countr_zero(s));
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Graph> a_family(const Graph& f) {
  std::map<CanonicalKey, Graph> members;
  for (const auto& independent : maximal_independent_sets(f)) {
    std::vector<int> rest;
    std::size_t j = 0;
    for (int v = 0; v < f.num_vertices(); ++v) {
      if (j < independent.size() && independent[j] == v) {
        ++j;
      } else {
        rest.push_back(v);
      }
    }
    Graph member = canonical_graph(induced_subgraph(f, rest));
    members.emplace(canonical_key(member), std::move(member));
  }
  std::vector<Graph> out;
  for (auto& [key, g] : members) out.push_back(std::move(g));
  return out;
}

bool in_m_family(const Graph& h, const std::vector<Graph>& a_family_of_f) {
  return std::none_of(a_family_of_f.begin(), a_family_of_f.end(),
                      [&](const Graph& a) { return contains_subgraph(h, a); });
}

bool in_m_family(const Graph& h, const Graph& f) { return in_m_family(h, a_family(f)); }

int m_family_order_bound(const Graph& f, const std::vector<Graph>& a_family_of_f) {
  int bound = f.num_vertices() - 1;
  for (const Graph& a : a_family_of_f) {
    if (a.num_edges() == 0) bound = std::min(bound, a.num_vertices() - 1);
  }
  return std::max(bound, 0);
}

std::optional<MMaximizer> m_f_maximizer(const Graph& f, int workers) {
  if (is_star(f)) throw std::domain_error("out of theorem scope: F is a star");
  if (!is_almost_bipartite(f)) {
    throw std::domain_error("out of theorem scope: F is not almost bipartite");
  }
  const auto family = a_family(f);
  const int bound = m_family_order_bound(f, family);
  if (bound > kMaximizerOrderCap) {
    throw std::length_error("M_F search needs graphs on " + std::to_string(bound) +
                            " vertices; the cap is " + std::to_string(kMaximizerOrderCap));
  }
  EnumerationOptions opts;
  opts.workers = workers;
  opts.keep = [&family](const Graph& h) { return in_m_family(h, family); };

  std::optional<MMaximizer> best;
  std::map<CanonicalKey, Graph> winners;
  for (int v = 1; v <= bound; ++v) {
    for (const Graph& h : enumerate_graphs_on_vertices(v, opts)) {
      if (h.num_edges() == 0) continue;
      const Ratio ratio(h.num_edges(), v);
      if (best && ratio < best->ratio) continue;
      if (!best || ratio > best->ratio) {
        best = MMaximizer{ratio, {}};
        winners.clear();
      }
      Graph c = canonical_graph(h);
      winners.emplace(canonical_key(c), std::move(c));
    }
  }
  if (best) {
    for (auto& [key, g] : winners) best->graphs.push_back(std::move(g));
  }
  return best;
}

ForbiddenProfile profile(const Graph& f, int workers) {
  ForbiddenProfile p;
  p.chromatic = chromatic_number(f);
  p.color_critical = f.num_edges() > 0 && is_color_critical(f);
  p.almost_bipartite = is_almost_bipartite(f);
  p.alpha = independence_number(f);
  if (f.num_edges() > 0 && is_bipartite(f)) p.sigma = color_surplus(f);
  p.a_family = a_family(f);
  if (is_star(f)) {
    p.maximizer_note = "F is a star";
  } else if (!p.almost_bipartite) {
    p.maximizer_note = "F is not almost bipartite";
  } else if (m_family_order_bound(f, p.a_family) > kMaximizerOrderCap) {
    p.maximizer_note = "order bound exceeds the exhaustive cap";
  } else {
    p.maximizer = m_f_maximizer(f, workers);
    if (!p.maximizer) p.maximizer_note = "every graph in M_F is empty";
  }
  return p;
}

std::string to_string(const Ratio& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace edgespec
