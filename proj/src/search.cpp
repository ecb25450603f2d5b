#include "edgespec/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "edgespec/enumerate.hpp"
#include "edgespec/generators.hpp"
#include "edgespec/io.hpp"
#include "edgespec/spectral.hpp"
#include "parallel.hpp"

namespace edgespec {

namespace {

std::vector<Graph> free_graphs(const Graph& f, int m, int workers) {
  EnumerationOptions opts;
  opts.workers = workers;
  opts.keep = [&f](const Graph& g) { return !contains_subgraph(g, f); };
  return enumerate_graphs(m, opts);
}

void require_scope(const Graph& f) {
  if (is_star(f)) throw std::domain_error("out of theorem scope: F is a star");
  if (!is_almost_bipartite(f)) {
    throw std::domain_error("out of theorem scope: F is not almost bipartite");
  }
}

std::vector<CanonicalKey> sorted_unique(std::vector<CanonicalKey> keys) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kBoundHolds:
      return "bound-holds";
    case Verdict::kBoundViolated:
      return "bound-violated";
    case Verdict::kNoBound:
      break;
  }
  return "no-bound";
}

std::string_view to_string(Shape s) {
  switch (s) {
    case Shape::kCompleteBipartite:
      return "complete-bipartite";
    case Shape::kSplitCore:
      return "split-core";
    case Shape::kUnmatched:
      break;
  }
  return "unmatched";
}

std::vector<double> spectral_radii(const std::vector<Graph>& graphs, int workers) {
  std::vector<double> out(graphs.size());
  detail::parallel_for(graphs.size(), workers,
                       [&](std::size_t i) { out[i] = spectral_radius(graphs[i]).lambda1; });
  return out;
}

SearchRecord spectral_extremal(const Graph& f, int m, const SearchOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  SearchRecord rec;
  rec.forbidden = opts.label.empty() ? to_graph6(f) : opts.label;
  rec.m = m;
  rec.bound = opts.bound;

  const auto graphs = free_graphs(f, m, opts.workers);
  const auto lambdas = spectral_radii(graphs, opts.workers);
  rec.graphs = static_cast<long long>(graphs.size());
  if (!graphs.empty()) rec.max_lambda = *std::max_element(lambdas.begin(), lambdas.end());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (lambdas[i] < rec.max_lambda - kMaximizerTol) continue;
    Graph c = canonical_graph(graphs[i]);
    rec.maximizers.push_back({canonical_key(c), std::move(c), lambdas[i]});
  }
  std::sort(rec.maximizers.begin(), rec.maximizers.end(),
            [](const Maximizer& a, const Maximizer& b) { return a.key < b.key; });
  if (rec.bound) {
    rec.verdict = rec.max_lambda <= *rec.bound + kBoundTol ? Verdict::kBoundHolds
                                                           : Verdict::kBoundViolated;
  }
  rec.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<CanonicalKey> nikiforov_equality_keys(int r, int m) {
  std::vector<CanonicalKey> keys;
  if (r == 2) {
    for (int a = 1; a * a <= m; ++a) {
      if (m % a == 0) keys.push_back(canonical_key(complete_bipartite(a, m / a)));
    }
  } else {
    const int pairs = r * (r - 1) / 2;
    for (int t = 1; pairs * t * t <= m; ++t) {
      if (pairs * t * t == m) keys.push_back(canonical_key(blowup_complete(r, t)));
    }
  }
  return sorted_unique(std::move(keys));
}

std::vector<NikiforovRow> verify_nikiforov(int r, int m_lo, int m_hi, int workers) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (m_lo < 1 || m_hi < m_lo) throw std::invalid_argument("empty or invalid edge range");
  const Graph clique = complete(r + 1);
  std::vector<NikiforovRow> rows;
  for (int m = m_lo; m <= m_hi; ++m) {
    NikiforovRow row;
    row.m = m;
    const double square = (1.0 - 1.0 / r) * 2.0 * m;
    row.bound = std::sqrt(square);
    const auto graphs = free_graphs(clique, m, workers);
    const auto lambdas = spectral_radii(graphs, workers);
    row.graphs = static_cast<long long>(graphs.size());
    std::vector<CanonicalKey> equality;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const double l2 = lambdas[i] * lambdas[i];
      row.max_lambda = std::max(row.max_lambda, lambdas[i]);
      if (l2 > square + kBoundTol) ++row.violations;
      if (l2 >= square - kBoundTol) equality.push_back(canonical_key(graphs[i]));
    }
    row.slack = row.bound - row.max_lambda;
    row.equality = sorted_unique(std::move(equality));
    row.predicted = nikiforov_equality_keys(r, m);
    rows.push_back(std::move(row));
  }
  return rows;
}

bool is_complete_bipartite(const Graph& g) {
  if (g.num_vertices() < 2 || !is_connected(g)) return false;
  const auto colors = two_coloring(g);
  if (!colors) return false;
  const long long ones = std::count(colors->begin(), colors->end(), 1);
  return static_cast<long long>(g.num_edges()) == ones * (g.num_vertices() - ones);
}

std::optional<std::vector<int>> find_split_core(const Graph& g, const Graph& f,
                                                const std::vector<Graph>& a_family_of_f) {
  const int n = g.num_vertices();
  if (n > 64) throw std::length_error("split-core search is capped at 64 vertices");
  std::vector<std::uint64_t> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.row(v)[0];
  const int max_core = f.num_vertices() - 1;

  // Enumerate vertex covers A with |A| <= max_core; C = V \ A is then
  // independent.
  std::vector<std::uint64_t> covers;
  auto assign = [&](auto&& self, int v, std::uint64_t a, std::uint64_t c) -> void {
    if (std::popcount(a) > max_core) return;
    if (v == n) {
      covers.push_back(a);
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << v;
    if ((adj[v] & c) == 0) self(self, v + 1, a, c | bit);
    self(self, v + 1, a | bit, c);
  };
  assign(assign, 0, 0, 0);

  std::vector<std::vector<int>> found;
  for (std::uint64_t a : covers) {
    if (std::popcount(a) < 2) continue;
    std::vector<int> core;
    bool has_edge = false;
    for (std::uint64_t x = a; x != 0; x &= x - 1) {
      const int v = std::countr_zero(x);
      core.push_back(v);
      has_edge = has_edge || (adj[v] & a) != 0;
    }
    if (!has_edge) continue;
    int partial = 0;
    for (int v = 0; v < n; ++v) {
      if ((a >> v) & 1U) continue;
      if ((adj[v] & a) != a) ++partial;
    }
    if (partial > 1) continue;
    if (!in_m_family(induced_subgraph(g, core), a_family_of_f)) continue;
    found.push_back(std::move(core));
  }
  if (found.empty()) return std::nullopt;
  return *std::min_element(found.begin(), found.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
}

bool StructureReport::all_matched() const {
  return std::none_of(entries.begin(), entries.end(),
                      [](const StructureEntry& e) { return e.shape == Shape::kUnmatched; });
}

StructureReport verify_structure(const Graph& f, int m, int workers) {
  require_scope(f);
  const auto family = a_family(f);
  SearchOptions opts;
  opts.workers = workers;
  const SearchRecord rec = spectral_extremal(f, m, opts);
  StructureReport report;
  report.m = m;
  report.max_lambda = rec.max_lambda;
  for (const Maximizer& mx : rec.maximizers) {
    StructureEntry entry{mx.key, mx.graph, mx.lambda, Shape::kUnmatched, {}};
    if (is_complete_bipartite(mx.graph)) {
      entry.shape = Shape::kCompleteBipartite;
    } else if (auto core = find_split_core(mx.graph, f, family)) {
      entry.shape = Shape::kSplitCore;
      entry.core = std::move(*core);
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

bool AsymptoticReport::holds() const {
  return std::all_of(rows.begin(), rows.end(), [](const AsymptoticRow& r) { return r.bounded; });
}

AsymptoticReport verify_asymptotic(const Graph& f, std::span<const long long> ms,
                                   double constant, int workers) {
  AsymptoticReport report;
  report.constant = constant;
  const auto maximizer = m_f_maximizer(f, workers);
  if (!maximizer) {
    report.complete_bipartite_regime = true;
    for (long long m : ms) report.rows.push_back({m, std::sqrt(static_cast<double>(m)), 0.0, true});
    return report;
  }
  report.ratio = maximizer->ratio;
  report.core = maximizer->graphs.front();
  const double ratio = boost::rational_cast<double>(report.ratio);
  report.rows.resize(ms.size());
  detail::parallel_for(ms.size(), workers, [&](std::size_t i) {
    const long long m = ms[i];
    const EdgeListGraph shape = core_split_edges(report.core, m);
    SpectralOptions opts;
    opts.want_lambda2 = false;
    const double lambda =
        spectral_radius(SparseGraph::from_edge_list(shape.n, shape.edges), opts).lambda1;
    const double root = std::sqrt(static_cast<double>(m));
    const double deviation = (lambda - root - ratio) * root;
    report.rows[i] = {m, lambda, deviation, std::abs(deviation) <= constant};
  });
  return report;
}

const std::vector<Table1Instance>& table1_instances() {
  static const std::vector<Table1Instance> instances = [] {
    std::vector<Table1Instance> out;
    auto add = [&](std::string family, std::vector<long long> params) {
      std::string row = table1_row(family, params).first;
      out.push_back({std::move(row), std::move(family), std::move(params)});
    };
    add("complete_bipartite", {2, 2});
    add("complete_bipartite", {2, 3});
    add("cycle", {4});
    add("cycle", {6});
    add("matching", {6});
    add("matching", {8});
    add("path", {6});
    add("path", {7});
    add("path", {8});
    add("path", {9});
    add("subdivision", {3});
    add("subdivision", {4});
    add("subdivision", {2, 2});
    add("subdivision", {2, 3});
    add("theta_multi", {2, 3});
    add("theta_multi", {3, 3});
    add("theta_multi", {2, 2});
    add("theta_multi", {3, 2});
    add("hypercube", {2});
    add("hypercube", {3});
    add("grid", {2});
    add("grid", {3});
    add("prism", {2});
    add("prism", {3});
    add("cycle_diagonals", {3});
    add("cycle_diagonals", {5});
    return out;
  }();
  return instances;
}

std::pair<std::string, int> table1_row(std::string_view family,
                                       std::span<const long long> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw std::invalid_argument(std::string(family) + " expects " + std::to_string(count) +
                                  " parameter(s)");
    }
  };
  auto outside = [&]() -> std::invalid_argument {
    return std::invalid_argument(std::string(family) + " instance is not covered by a row");
  };
  if (family == "complete_bipartite") {
    need(2);
    if (std::min(params[0], params[1]) < 2) throw outside();
    return {"K_{k+1,t+1}", static_cast<int>(std::min(params[0], params[1]) - 1)};
  }
  if (family == "cycle") {
    need(1);
    if (params[0] < 4 || params[0] % 2 != 0) throw outside();
    return {"C_{2k+2}", static_cast<int>(params[0] / 2 - 1)};
  }
  if (family == "matching") {
    need(1);
    if (params[0] < 6 || params[0] % 2 != 0) throw outside();
    return {"M_{2k+2}", static_cast<int>(params[0] / 2 - 1)};
  }
  if (family == "path") {
    need(1);
    if (params[0] < 6) throw outside();
    return {"P_{2k+2},P_{2k+3}", static_cast<int>((params[0] - 2) / 2)};
  }
  if (family == "subdivision") {
    if (params.size() == 1) {
      if (params[0] < 3) throw outside();
      return {"sub(K_{k+1})", static_cast<int>(params[0] - 1)};
    }
    need(2);
    if (std::min(params[0], params[1]) < 2) throw outside();
    return {"sub(K_{s+1,t+1})", static_cast<int>(params[0] + params[1] - 1)};
  }
  if (family == "theta_multi") {
    need(2);
    const long long t = params[0];
    const long long l = params[1];
    if (t < 2 || l < 2) throw outside();
    if (l % 2 == 1) return {"Theta_{t,l} odd l", static_cast<int>(t * (l - 1) / 2)};
    return {"Theta_{t,l} even l", static_cast<int>(t * (l - 2) / 2 + 1)};
  }
  if (family == "hypercube") {
    need(1);
    if (params[0] < 2 || params[0] > 14) throw outside();
    return {"Q_d", (1 << (params[0] - 1)) - 1};
  }
  if (family == "grid") {
    need(1);
    if (params[0] < 2) throw outside();
    return {"G_t", static_cast<int>(params[0] * params[0] / 2 - 1)};
  }
  if (family == "prism") {
    need(1);
    if (params[0] < 2) throw outside();
    return {"C_{2l}^square", static_cast<int>(2 * params[0] - 1)};
  }
  if (family == "cycle_diagonals") {
    need(1);
    if (params[0] < 3 || params[0] % 2 == 0) throw outside();
    return {"C_{2l}^dia", static_cast<int>(params[0] - 1)};
  }
  throw std::invalid_argument("family " + std::string(family) + " has no table row");
}

Table1Report table1_check(std::string_view family, std::span<const long long> params,
                          long long sample_m) {
  Table1Report report;
  std::tie(report.row, report.expected_k) = table1_row(family, params);
  report.family = std::string(family);
  report.params.assign(params.begin(), params.end());
  const Graph f = edgespec::family(family, params);
  if (f.num_vertices() > 20) throw std::length_error("table instances are capped at 20 vertices");
  report.order = f.num_vertices();
  report.alpha = independence_number(f);
  report.sigma = color_surplus(f);
  report.sample_m = sample_m;
  report.split_free = report.sigma >= 2 &&
                      !contains_subgraph(split_graph(report.sigma - 1, sample_m), f);
  return report;
}

std::vector<BnRow> conjecture_bn_probe(int r, int m_lo, int m_hi, int workers) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (m_lo < 1 || m_hi < m_lo) throw std::invalid_argument("empty or invalid edge range");
  const Graph clique = complete(r + 1);
  std::vector<BnRow> rows;
  for (int m = m_lo; m <= m_hi; ++m) {
    BnRow row;
    row.m = m;
    std::vector<Graph> graphs;
    for (Graph& g : free_graphs(clique, m, workers)) {
      if (g.num_vertices() >= r + 1) graphs.push_back(std::move(g));
    }
    row.graphs = static_cast<long long>(graphs.size());
    std::vector<double> excess(graphs.size());
    const double bound = (1.0 - 1.0 / r) * 2.0 * m;
    detail::parallel_for(graphs.size(), workers, [&](std::size_t i) {
      const SpectralResult s = spectral_radius(graphs[i]);
      excess[i] = s.lambda1 * s.lambda1 + s.lambda2 * s.lambda2 - bound;
    });
    if (!graphs.empty()) {
      row.max_excess = *std::max_element(excess.begin(), excess.end());
      std::vector<CanonicalKey> keys;
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (excess[i] >= *row.max_excess - kMaximizerTol) keys.push_back(canonical_key(graphs[i]));
      }
      row.argmax = sorted_unique(std::move(keys));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

OnsetReport split_extremality_onset(const Graph& f, int k, int m_lo, int m_hi, int workers) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (m_lo < 1 || m_hi < m_lo) throw std::invalid_argument("empty or invalid edge range");
  OnsetReport report;
  report.k = k;
  SearchOptions opts;
  opts.workers = workers;
  for (int m = m_lo; m <= m_hi; ++m) {
    const SearchRecord rec = spectral_extremal(f, m, opts);
    OnsetRow row{m, false, static_cast<long long>(rec.maximizers.size())};
    const bool defined = m > k && m > k * (k - 1) / 2;
    if (defined && rec.maximizers.size() == 1) {
      row.split_unique = rec.maximizers.front().key == canonical_key(split_graph(k, m));
    }
    report.rows.push_back(row);
  }
  for (auto it = report.rows.rbegin(); it != report.rows.rend() && it->split_unique; ++it) {
    report.onset = it->m;
  }
  return report;
}

}  // namespace edgespec
