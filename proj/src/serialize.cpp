#include "edgespec/serialize.hpp"

#include <cmath>
#include <algorithm>
#include <cstdio>

namespace edgespec {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json real(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::stod(format_real(x));
}

namespace {

Json keys_json(const std::vector<CanonicalKey>& keys) {
  Json out = Json::array();
  for (const auto& k : keys) out.push_back(k.hex());
  return out;
}

Json optional_real(const std::optional<double>& x) { return x ? real(*x) : Json(nullptr); }

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

Json to_json(const SpectralResult& r) {
  Json perron = Json::array();
  for (double v : r.perron) perron.push_back(real(v));
  return {{"lambda1", real(r.lambda1)},
          {"lambda2", real(r.lambda2)},
          {"method", std::string(to_string(r.method))},
          {"residual", real(r.residual)},
          {"iterations", r.iterations},
          {"converged", r.converged},
          {"perron", std::move(perron)}};
}

Json to_json(const ForbiddenProfile& p) {
  Json out = {{"chromatic", p.chromatic},
              {"colorCritical", p.color_critical},
              {"almostBipartite", p.almost_bipartite},
              {"alpha", p.alpha}};
  if (p.sigma) out["sigma"] = *p.sigma;
  Json family = Json::array();
  for (const Graph& a : p.a_family) family.push_back(to_json(a));
  out["aFamily"] = std::move(family);
  if (p.maximizer) {
    Json graphs = Json::array();
    for (const Graph& m : p.maximizer->graphs) graphs.push_back(to_json(m));
    out["mMaximizer"] = {{"graph", to_json(p.maximizer->graphs.front())},
                         {"ratio", to_string(p.maximizer->ratio)},
                         {"count", p.maximizer->graphs.size()},
                         {"all", std::move(graphs)}};
  } else {
    out["mMaximizerNote"] = p.maximizer_note;
  }
  return out;
}

Json to_json(const SearchRecord& r, bool stable) {
  Json maximizers = Json::array();
  for (const Maximizer& m : r.maximizers) {
    maximizers.push_back(
        {{"key", m.key.hex()}, {"edgeList", to_json(m.graph)}, {"lambda", real(m.lambda)}});
  }
  Json out = {{"forbidden", r.forbidden},
              {"m", r.m},
              {"maxLambda", real(r.max_lambda)},
              {"bound", optional_real(r.bound)},
              {"verdict", std::string(to_string(r.verdict))},
              {"graphs", r.graphs},
              {"maximizers", std::move(maximizers)}};
  if (!stable) out["elapsedMs"] = real(r.elapsed_ms);
  return out;
}

Json to_json(const NikiforovRow& r) {
  return {{"m", r.m},
          {"graphs", r.graphs},
          {"maxLambda", real(r.max_lambda)},
          {"bound", real(r.bound)},
          {"slack", real(r.slack)},
          {"violations", r.violations},
          {"equality", keys_json(r.equality)},
          {"predicted", keys_json(r.predicted)},
          {"holds", r.holds()}};
}

Json to_json(const StructureReport& r) {
  Json entries = Json::array();
  for (const StructureEntry& e : r.entries) {
    entries.push_back({{"key", e.key.hex()},
                       {"edgeList", to_json(e.graph)},
                       {"lambda", real(e.lambda)},
                       {"shape", std::string(to_string(e.shape))},
                       {"core", e.core}});
  }
  return {{"m", r.m},
          {"maxLambda", real(r.max_lambda)},
          {"allMatched", r.all_matched()},
          {"maximizers", std::move(entries)}};
}

Json to_json(const AsymptoticReport& r) {
  Json rows = Json::array();
  for (const AsymptoticRow& row : r.rows) {
    rows.push_back({{"m", row.m},
                    {"lambda", real(row.lambda)},
                    {"deviation", real(row.deviation)},
                    {"bounded", row.bounded}});
  }
  Json out = {{"regime", r.complete_bipartite_regime ? "complete-bipartite" : "split-core"}};
  if (!r.complete_bipartite_regime) {
    out["ratio"] = to_string(r.ratio);
    out["core"] = to_json(r.core);
  }
  out["constant"] = real(r.constant);
  out["rows"] = std::move(rows);
  out["holds"] = r.holds();
  return out;
}

Json to_json(const Table1Report& r) {
  return {{"row", r.row},
          {"family", r.family},
          {"params", r.params},
          {"order", r.order},
          {"alpha", r.alpha},
          {"sigma", r.sigma},
          {"k", r.expected_k},
          {"sampleM", r.sample_m},
          {"splitFree", r.split_free},
          {"pass", r.pass()}};
}

Json to_json(const BnRow& r) {
  return {{"m", r.m},
          {"graphs", r.graphs},
          {"maxExcess", optional_real(r.max_excess)},
          {"argmax", keys_json(r.argmax)},
          {"holds", r.holds()}};
}

Json to_json(const OnsetReport& r) {
  Json rows = Json::array();
  for (const OnsetRow& row : r.rows) {
    rows.push_back(
        {{"m", row.m}, {"splitUnique", row.split_unique}, {"maximizers", row.maximizers}});
  }
  return {{"k", r.k},
          {"rows", std::move(rows)},
          {"onset", r.onset ? Json(*r.onset) : Json(nullptr)}};
}

Json to_json(const StabilityReport& r) {
  return {{"editCount", r.edit_count},
          {"lambda1H", real(r.lambda1_h)},
          {"lambda2H", real(r.lambda2_h)},
          {"gap", real(r.gap)},
          {"lhs1", real(r.lhs1)},
          {"rhs1", optional_real(r.rhs1)},
          {"lhs2", real(r.lhs2)},
          {"rhs2", optional_real(r.rhs2)},
          {"pass1", r.pass1},
          {"pass2", r.pass2},
          {"vacuous", r.vacuous}};
}

Json to_json(const StabilityBatch& b) {
  double worst1 = 0.0;
  double worst2 = 0.0;
  std::size_t successes = 0;
  for (const auto& p : b.pairs) {
    if (p.report.pass1 && p.report.pass2) ++successes;
    if (p.report.rhs1 && *p.report.rhs1 > 0) worst1 = std::max(worst1, p.report.lhs1 / *p.report.rhs1);
    if (p.report.rhs2 && *p.report.rhs2 > 0) worst2 = std::max(worst2, p.report.lhs2 / *p.report.rhs2);
  }
  return {{"seed", b.seed},
          {"trials", b.pairs.size()},
          {"successes", successes},
          {"failures1", b.failures1},
          {"failures2", b.failures2},
          {"chainFailures", b.chain_failures},
          {"vacuous", b.vacuous},
          {"worstRatio1", real(worst1)},
          {"worstRatio2", real(worst2)}};
}

Json to_json(const BlowupBatch& b) {
  return {{"seed", b.seed},
          {"trials", b.trials},
          {"successes", b.successes},
          {"validated", b.validated},
          {"rate", real(b.rate())}};
}

Json to_json(const TuranBounds& b) {
  return {{"n", b.n},
          {"r", b.r},
          {"s", b.s},
          {"edges", b.edges},
          {"lower", real(b.lower)},
          {"upper", real(b.upper)},
          {"identity", b.identity_ok},
          {"lowerOk", b.lower_ok},
          {"upperOk", b.upper_ok}};
}

}  // namespace edgespec
