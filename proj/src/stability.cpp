#include "edgespec/stability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "edgespec/forbidden.hpp"
#include "edgespec/generators.hpp"
#include "edgespec/random.hpp"
#include "edgespec/spectral.hpp"
#include "parallel.hpp"

namespace edgespec {

namespace {

// part_of[v] is the index of v's part, or -1.
std::vector<int> part_index(const Graph& g, const std::vector<std::vector<int>>& parts) {
  std::vector<int> part_of(g.num_vertices(), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int v : parts[i]) {
      if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("part vertex out of range");
      if (part_of[v] != -1) throw std::invalid_argument("parts overlap");
      part_of[v] = static_cast<int>(i);
    }
  }
  return part_of;
}

void check_sampling(const Graph& g, const std::vector<std::vector<int>>& parts, int t) {
  part_index(g, parts);
  if (parts.size() < 2) throw std::invalid_argument("sampling needs at least two parts");
  if (t < 1) throw std::invalid_argument("t must be positive");
  for (const auto& p : parts) {
    if (static_cast<int>(p.size()) < t) throw std::invalid_argument("a part has fewer than t vertices");
  }
  if (parts.size() >= 3) {
    for (const auto& p : parts) {
      if (p.size() != parts.front().size()) {
        throw std::invalid_argument("parts must have equal sizes when r >= 3");
      }
    }
  }
}

bool complete_between(const Graph& g, const std::vector<int>& x, const std::vector<int>& y) {
  for (int u : x) {
    for (int v : y) {
      if (!g.has_edge(u, v)) return false;
    }
  }
  return true;
}

double sum_sq_diff(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t v = 0; v < x.size(); ++v) s += (x[v] - y[v]) * (x[v] - y[v]);
  return s;
}

}  // namespace

StabilityReport verify_pf_stability(const Graph& g, const Graph& h) {
  const int n = std::max(g.num_vertices(), h.num_vertices());
  const Graph gg = extend_to(g, n);
  const Graph hh = extend_to(h, n);
  StabilityReport rep;
  rep.edit_count = edit_distance_labeled(gg, hh);
  const SpectralResult sg = spectral_radius(gg);
  const SpectralResult sh = spectral_radius(hh);
  rep.lambda1_h = sh.lambda1;
  rep.lambda2_h = sh.lambda2;
  rep.gap = sh.lambda1 - sh.lambda2;
  rep.lhs1 = sum_sq_diff(sg.perron, sh.perron);
  for (int v = 0; v < n; ++v) {
    rep.lhs2 += std::abs(sg.perron[v] * sg.perron[v] - sh.perron[v] * sh.perron[v]);
  }
  if (rep.gap < kGapFloor) {
    rep.vacuous = true;
    rep.pass1 = rep.pass2 = true;
    return rep;
  }
  const double e = rep.edit_count;
  rep.rhs1 = 8.0 * std::sqrt(e) / rep.gap;
  rep.rhs2 = 8.0 * std::pow(e, 0.25) / std::sqrt(rep.gap);
  rep.pass1 = rep.lhs1 <= *rep.rhs1 + kStabilityTol;
  rep.pass2 = rep.lhs2 <= *rep.rhs2 + kStabilityTol;
  return rep;
}

long long multipartite_defect(const Graph& g, const std::vector<std::vector<int>>& parts) {
  const auto part_of = part_index(g, parts);
  long long full = 0;
  long long total = 0;
  for (const auto& p : parts) {
    full += total * static_cast<long long>(p.size());
    total += static_cast<long long>(p.size());
  }
  long long present = 0;
  for (const Edge& e : g.edges()) {
    if (part_of[e.u] != -1 && part_of[e.v] != -1 && part_of[e.u] != part_of[e.v]) ++present;
  }
  return full - present;
}

std::optional<BlowupSample> blowup_trial(const Graph& g,
                                         const std::vector<std::vector<int>>& parts, int t,
                                         std::uint64_t seed, long long trial) {
  auto rng = trial_engine(seed, static_cast<std::uint64_t>(trial));
  BlowupSample sample;
  sample.trial = trial;
  for (const auto& part : parts) {
    std::vector<int> chosen;
    for (int i : sample_indices(rng, static_cast<int>(part.size()), t)) chosen.push_back(part[i]);
    std::sort(chosen.begin(), chosen.end());
    sample.sets.push_back(std::move(chosen));
  }
  for (std::size_t i = 0; i < sample.sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sample.sets.size(); ++j) {
      if (!complete_between(g, sample.sets[i], sample.sets[j])) return std::nullopt;
    }
  }
  return sample;
}

std::optional<BlowupSample> sample_blowup(const Graph& g,
                                          const std::vector<std::vector<int>>& parts, int t,
                                          std::uint64_t seed, long long max_trials) {
  check_sampling(g, parts, t);
  for (long long trial = 0; trial < max_trials; ++trial) {
    if (auto s = blowup_trial(g, parts, t, seed, trial)) return s;
  }
  return std::nullopt;
}

BlowupBatch blowup_batch(const Graph& g, const std::vector<std::vector<int>>& parts, int t,
                         std::uint64_t seed, long long trials, int workers) {
  check_sampling(g, parts, t);
  const Graph target = blowup_complete(static_cast<int>(parts.size()), t);
  std::vector<char> success(trials, 0);
  std::vector<char> valid(trials, 0);
  detail::parallel_for(static_cast<std::size_t>(trials), workers, [&](std::size_t i) {
    const auto s = blowup_trial(g, parts, t, seed, static_cast<long long>(i));
    if (!s) return;
    success[i] = 1;
    std::vector<int> vertices;
    for (const auto& set : s->sets) vertices.insert(vertices.end(), set.begin(), set.end());
    valid[i] = contains_subgraph(induced_subgraph(g, vertices), target) ? 1 : 0;
  });
  BlowupBatch batch;
  batch.seed = seed;
  batch.trials = trials;
  batch.successes = std::count(success.begin(), success.end(), 1);
  batch.validated = std::count(valid.begin(), valid.end(), 1);
  return batch;
}

Graph remove_random_cross_edges(const Graph& g, const std::vector<std::vector<int>>& parts,
                                int count, std::uint64_t seed) {
  const auto part_of = part_index(g, parts);
  std::vector<Edge> cross;
  for (const Edge& e : g.edges()) {
    if (part_of[e.u] != -1 && part_of[e.v] != -1 && part_of[e.u] != part_of[e.v]) {
      cross.push_back(e);
    }
  }
  if (count < 0 || count > static_cast<int>(cross.size())) {
    throw std::invalid_argument("cannot remove that many cross edges");
  }
  auto rng = trial_engine(seed, 0);
  Graph out = g;
  for (int i : sample_indices(rng, static_cast<int>(cross.size()), count)) {
    out.remove_edge(cross[i].u, cross[i].v);
  }
  return out;
}

std::vector<std::vector<int>> blowup_parts(int r, int t) {
  std::vector<std::vector<int>> parts(r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < t; ++j) parts[i].push_back(i * t + j);
  }
  return parts;
}

TuranBounds turan_edge_bounds(int n, int r) {
  if (r < 1 || n < r) throw std::invalid_argument("Turan bounds need n >= r >= 1");
  TuranBounds b;
  b.n = n;
  b.r = r;
  b.s = n % r;
  b.edges = turan(n, r).num_edges();
  const long long nn = static_cast<long long>(n) * n;
  const long long e = b.edges;
  b.upper = (1.0 - 1.0 / r) * static_cast<double>(nn) / 2.0;
  b.lower = b.upper - r / 8.0;
  b.identity_ok = 2LL * r * e == (r - 1) * nn - static_cast<long long>(b.s) * (r - b.s);
  b.lower_ok = 8LL * r * e >= 4LL * (r - 1) * nn - static_cast<long long>(r) * r;
  b.upper_ok = 2LL * r * e <= (r - 1) * nn;
  return b;
}

StabilityBatch stability_batch(std::uint64_t seed, int pairs, int workers) {
  StabilityBatch batch;
  batch.seed = seed;
  batch.pairs.resize(pairs);
  detail::parallel_for(static_cast<std::size_t>(pairs), workers, [&](std::size_t i) {
    auto rng = trial_engine(seed, i);
    StabilityPair& p = batch.pairs[i];
    p.a = 3 + static_cast<int>(uniform_below(rng, 6));
    p.b = 3 + static_cast<int>(uniform_below(rng, 6));
    const Graph h = complete_bipartite(p.a, p.b);
    const int n = p.a + p.b;
    p.edits = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(p.a * p.b / 4 + 1)));
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    }
    Graph g = h;
    for (int idx : sample_indices(rng, static_cast<int>(all.size()), p.edits)) {
      const Edge& e = all[idx];
      if (!g.remove_edge(e.u, e.v)) g.add_edge(e.u, e.v);
    }
    p.report = verify_pf_stability(g, h);
  });
  for (const auto& p : batch.pairs) {
    if (p.report.vacuous) ++batch.vacuous;
    if (!p.report.pass1) ++batch.failures1;
    if (!p.report.pass2) ++batch.failures2;
    if (p.report.lhs2 > 2.0 * std::sqrt(p.report.lhs1) + kStabilityTol) ++batch.chain_failures;
  }
  return batch;
}

}  // namespace edgespec
