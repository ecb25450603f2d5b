#include "edgespec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "edgespec/canonical.hpp"
#include "edgespec/enumerate.hpp"
#include "edgespec/forbidden.hpp"
#include "edgespec/generators.hpp"
#include "edgespec/io.hpp"
#include "edgespec/search.hpp"
#include "edgespec/serialize.hpp"
#include "edgespec/spectral.hpp"
#include "edgespec/stability.hpp"

namespace edgespec::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format;
  double tol = 1e-10;
  std::uint64_t seed = 1;
  int workers = 1;
  std::optional<int> m;
  std::optional<int> m_max;
  std::optional<int> k;
  std::optional<int> r;
  std::string family;
  std::string params;
  std::string forbid;
  std::optional<double> bound;
  double constant = 0.5;
  bool stable = false;
  std::vector<std::string> inputs;
};

std::vector<long long> parse_params(const std::string& text) {
  std::vector<long long> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError("--params expects comma-separated integers, got '" + text + "'");
    }
    if (used != item.size()) {
      throw UsageError("--params expects comma-separated integers, got '" + text + "'");
    }
    out.push_back(v);
  }
  return out;
}

bool is_family(std::string_view name) {
  const auto& names = family_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

struct NamedGraph {
  Graph graph;
  std::string label;
};

// "family:params" or a graph argument (file or graph6).
NamedGraph parse_forbid(const std::string& spec) {
  if (spec.empty()) throw UsageError("--forbid is required");
  const auto colon = spec.find(':');
  if (colon != std::string::npos && is_family(spec.substr(0, colon))) {
    const auto params = parse_params(spec.substr(colon + 1));
    return {family(spec.substr(0, colon), params), spec};
  }
  if (is_family(spec)) return {family(spec, {}), spec};
  return {load_graph_argument(spec), spec};
}

Graph input_graph(const Config& cfg, std::size_t index = 0) {
  if (cfg.inputs.size() > index) return load_graph_argument(cfg.inputs[index]);
  if (!cfg.family.empty()) {
    if (cfg.family == "split" && cfg.k && cfg.m) return split_graph(*cfg.k, *cfg.m);
    return family(cfg.family, parse_params(cfg.params));
  }
  throw UsageError("expected a graph (edge-list file, graph6 string, or --family/--params)");
}

std::string format_or(const Config& cfg, std::string fallback,
                      std::initializer_list<std::string_view> allowed) {
  std::string f = cfg.format.empty() ? std::move(fallback) : cfg.format;
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
    throw UsageError("format '" + f + "' is not available for this command");
  }
  return f;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string params_text(const std::vector<long long>& params) {
  std::string s;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(params[i]);
  }
  return s;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

int cmd_gen(const Config& cfg, std::ostream& out) {
  const std::string fmt = format_or(cfg, "edge-list", {"edge-list", "graph6", "json"});
  if (cfg.inputs.empty()) throw UsageError("gen needs a family tag");
  Config c = cfg;
  c.family = cfg.inputs.front();
  c.inputs.clear();
  const Graph g = input_graph(c);
  if (fmt == "edge-list") {
    out << write_edge_list(g);
  } else if (fmt == "graph6") {
    out << to_graph6(g) << '\n';
  } else {
    print_json(out, to_json(g));
  }
  return kOk;
}

int cmd_lambda(const Config& cfg, std::ostream& out) {
  const std::string fmt = format_or(cfg, "json", {"json", "csv"});
  const Graph g = input_graph(cfg);
  SpectralOptions opts;
  opts.tol = cfg.tol;
  const SpectralResult r = spectral_radius(g, opts);
  if (fmt == "json") {
    Json j = {{"n", g.num_vertices()}, {"m", g.num_edges()}};
    j.update(to_json(r));
    print_json(out, j);
  } else {
    out << "n,m,lambda1,lambda2,method,residual\n"
        << g.num_vertices() << ',' << g.num_edges() << ',' << format_real(r.lambda1) << ','
        << format_real(r.lambda2) << ',' << to_string(r.method) << ','
        << format_real(r.residual) << '\n';
  }
  return kOk;
}

int cmd_profile(const Config& cfg, std::ostream& out) {
  format_or(cfg, "json", {"json"});
  print_json(out, to_json(profile(input_graph(cfg), cfg.workers)));
  return kOk;
}

int cmd_canon(const Config& cfg, std::ostream& out) {
  const std::string fmt = format_or(cfg, "json", {"json", "edge-list", "graph6"});
  const Graph g = input_graph(cfg);
  const CanonicalForm form = canonical_form(g);
  const Graph c = relabel(g, form.labeling);
  if (fmt == "edge-list") {
    out << write_edge_list(c);
  } else if (fmt == "graph6") {
    out << to_graph6(c) << '\n';
  } else {
    print_json(out, {{"key", form.key.hex()},
                     {"graph6", to_graph6(c)},
                     {"labeling", form.labeling},
                     {"edgeList", to_json(c)}});
  }
  return kOk;
}

std::pair<int, int> m_range(const Config& cfg, int default_lo, int default_hi) {
  const int lo = cfg.m.value_or(cfg.m_max ? default_lo : default_lo);
  const int hi = cfg.m_max.value_or(cfg.m ? *cfg.m : default_hi);
  if (lo < 0 || hi < lo) throw UsageError("invalid edge range");
  return {lo, hi};
}

void csv_search_header(std::ostream& out) { out << "forbidden,m,maxLambda,bound,slack,verdict\n"; }

void csv_search_row(std::ostream& out, const std::string& forbidden, int m, double max_lambda,
                    std::optional<double> bound, std::string_view verdict) {
  out << csv_field(forbidden) << ',' << m << ',' << format_real(max_lambda) << ',';
  if (bound) out << format_real(*bound) << ',' << format_real(*bound - max_lambda);
  else out << ',';
  out << ',' << verdict << '\n';
}

int cmd_search(const Config& cfg, std::ostream& out) {
  const std::string fmt = format_or(cfg, "json", {"json", "csv"});
  const NamedGraph f = parse_forbid(cfg.forbid);
  if (!cfg.m) throw UsageError("search needs --m");
  const auto [lo, hi] = m_range(cfg, *cfg.m, *cfg.m);
  SearchOptions opts;
  opts.workers = cfg.workers;
  opts.label = f.label;
  std::vector<SearchRecord> records;
  for (int m = lo; m <= hi; ++m) {
    opts.bound = cfg.bound;
    records.push_back(spectral_extremal(f.graph, m, opts));
  }
  bool violated = false;
  for (const auto& rec : records) violated = violated || rec.verdict == Verdict::kBoundViolated;
  if (fmt == "json") {
    if (records.size() == 1) {
      print_json(out, to_json(records.front(), cfg.stable));
    } else {
      Json arr = Json::array();
      for (const auto& rec : records) arr.push_back(to_json(rec, cfg.stable));
      print_json(out, arr);
    }
  } else {
    csv_search_header(out);
    for (const auto& rec : records) {
      csv_search_row(out, rec.forbidden, rec.m, rec.max_lambda, rec.bound, to_string(rec.verdict));
    }
  }
  return violated ? kViolation : kOk;
}

int verify_nikiforov_cmd(const Config& cfg, std::ostream& out, int r) {
  const std::string fmt = format_or(cfg, "csv", {"json", "csv"});
  const int lo = cfg.m.value_or(1);
  const int hi = cfg.m_max.value_or(std::max(lo, 9));
  const auto rows = verify_nikiforov(r, lo, hi, cfg.workers);
  const std::string label = "complete:" + std::to_string(r + 1);
  bool ok = true;
  for (const auto& row : rows) ok = ok && row.holds();
  if (fmt == "json") {
    Json arr = Json::array();
    for (const auto& row : rows) arr.push_back(to_json(row));
    print_json(out, {{"forbidden", label}, {"r", r}, {"rows", std::move(arr)}, {"holds", ok}});
  } else {
    csv_search_header(out);
    for (const auto& row : rows) {
      csv_search_row(out, label, row.m, row.max_lambda, row.bound,
                     row.holds() ? "bound-holds" : "bound-violated");
    }
  }
  return ok ? kOk : kViolation;
}

int verify_c4(const Config& cfg, std::ostream& out) {
  const std::string fmt = format_or(cfg, "csv", {"json", "csv"});
  const int m = cfg.m.value_or(10);
  SearchOptions opts;
  opts.workers = cfg.workers;
  opts.label = "cycle:4";
  opts.bound = std::sqrt(static_cast<double>(m));
  const SearchRecord rec = spectral_extremal(cycle(4), m, opts);
  const bool unique_star = rec.maximizers.size() == 1 &&
                           rec.maximizers.front().key == canonical_key(star(m));
  const bool ok = rec.verdict == Verdict::kBoundHolds && unique_star;
  if (fmt == "json") {
    Json j = to_json(rec, cfg.stable);
    j["uniqueStar"] = unique_star;
    print_json(out, j);
  } else {
    csv_search_header(out);
    csv_search_row(out, rec.forbidden, m, rec.max_lambda, rec.bound,
                   ok ? "bound-holds" : "bound-violated");
  }
  return ok ? kOk : kViolation;
}

int verify_structure_cmd(const Config& cfg, std::ostream& out) {
  const std::string fmt = format_or(cfg, "csv", {"json", "csv"});
  const NamedGraph f = parse_forbid(cfg.forbid);
  if (!cfg.m) throw UsageError("verify structure needs --m");
  const auto [lo, hi] = m_range(cfg, *cfg.m, *cfg.m);
  std::vector<StructureReport> reports;
  for (int m = lo; m <= hi; ++m) reports.push_back(verify_structure(f.graph, m, cfg.workers));
  std::optional<OnsetReport> onset;
  if (cfg.k) onset = split_extremality_onset(f.graph, *cfg.k, lo, hi, cfg.workers);
  if (fmt == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    Json j = {{"forbidden", f.label}, {"reports", std::move(arr)}};
    if (onset) j["onset"] = to_json(*onset);
    print_json(out, j);
  } else {
    out << "forbidden,m,key,shape,core,lambda\n";
    for (const auto& r : reports) {
      for (const auto& e : r.entries) {
        std::string core;
        for (std::size_t i = 0; i < e.core.size(); ++i) core += (i ? ";" : "") + std::to_string(e.core[i]);
        out << csv_field(f.label) << ',' << r.m << ',' << e.key.hex() << ',' << to_string(e.shape) << ','
            << core << ',' << format_real(e.lambda) << '\n';
      }
    }
  }
  // Shapes at small m are informational.
  return kOk;
}

int verify_asymptotic_cmd(const Config& cfg, std::ostream& out) {
  const std::string fmt = format_or(cfg, "csv", {"json", "csv"});
  const NamedGraph f = parse_forbid(cfg.forbid);
  std::vector<long long> ms = parse_params(cfg.params);
  if (ms.empty()) ms = {100, 1000, 10000, 100000};
  const AsymptoticReport rep = verify_asymptotic(f.graph, ms, cfg.constant, cfg.workers);
  if (fmt == "json") {
    Json j = {{"forbidden", f.label}};
    j.update(to_json(rep));
    print_json(out, j);
  } else {
    out << "forbidden,regime,ratio,m,lambda,deviation,bounded\n";
    for (const auto& row : rep.rows) {
      out << csv_field(f.label) << ',' << (rep.complete_bipartite_regime ? "complete-bipartite" : "split-core")
          << ',' << to_string(rep.ratio) << ',' << row.m << ',' << format_real(row.lambda) << ','
          << format_real(row.deviation) << ',' << bool_text(row.bounded) << '\n';
    }
  }
  return rep.holds() ? kOk : kViolation;
}

int verify_table1_cmd(const Config& cfg, std::ostream& out) {
  const std::string fmt = format_or(cfg, "csv", {"json", "csv"});
  const long long sample_m = cfg.m.value_or(100);
  std::vector<Table1Report> reports;
  if (!cfg.family.empty()) {
    reports.push_back(table1_check(cfg.family, parse_params(cfg.params), sample_m));
  } else {
    for (const auto& inst : table1_instances()) {
      reports.push_back(table1_check(inst.family, inst.params, sample_m));
    }
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.pass();
  if (fmt == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    print_json(out, {{"rows", std::move(arr)}, {"holds", ok}});
  } else {
    out << "row,family,params,order,alpha,sigma,k,splitFree,pass\n";
    for (const auto& r : reports) {
      out << csv_field(r.row) << ',' << r.family << ',' << params_text(r.params) << ',' << r.order
          << ',' << r.alpha << ',' << r.sigma << ',' << r.expected_k << ','
          << bool_text(r.split_free) << ',' << bool_text(r.pass()) << '\n';
    }
  }
  return ok ? kOk : kViolation;
}

int verify_stability_cmd(const Config& cfg, std::ostream& out) {
  const std::string fmt = format_or(cfg, "csv", {"json", "csv"});
  if (cfg.inputs.size() == 2) {
    const StabilityReport rep = verify_pf_stability(input_graph(cfg, 0), input_graph(cfg, 1));
    if (fmt == "json") {
      print_json(out, to_json(rep));
    } else {
      out << "editCount,gap,lhs1,rhs1,lhs2,rhs2,pass1,pass2,vacuous\n"
          << rep.edit_count << ',' << format_real(rep.gap) << ',' << format_real(rep.lhs1) << ','
          << (rep.rhs1 ? format_real(*rep.rhs1) : "") << ',' << format_real(rep.lhs2) << ','
          << (rep.rhs2 ? format_real(*rep.rhs2) : "") << ',' << bool_text(rep.pass1) << ','
          << bool_text(rep.pass2) << ',' << bool_text(rep.vacuous) << '\n';
    }
    return rep.pass1 && rep.pass2 ? kOk : kViolation;
  }
  if (!cfg.inputs.empty()) throw UsageError("verify stability takes zero or two graphs");
  const auto params = parse_params(cfg.params);
  const int pairs = params.empty() ? 500 : static_cast<int>(params.front());
  if (pairs < 1) throw UsageError("pair count must be positive");
  const StabilityBatch batch = stability_batch(cfg.seed, pairs, cfg.workers);
  const bool ok = batch.failures1 == 0 && batch.failures2 == 0 && batch.chain_failures == 0;
  const Json j = to_json(batch);
  if (fmt == "json") {
    print_json(out, j);
  } else {
    out << "seed,trials,successes,failures1,failures2,chainFailures,vacuous\n"
        << batch.seed << ',' << pairs << ',' << j["successes"].get<std::size_t>() << ','
        << batch.failures1 << ',' << batch.failures2 << ',' << batch.chain_failures << ','
        << batch.vacuous << '\n';
  }
  return ok ? kOk : kViolation;
}

int verify_turan_cmd(const Config& cfg, std::ostream& out) {
  const std::string fmt = format_or(cfg, "csv", {"json", "csv"});
  const auto params = parse_params(cfg.params);
  const int n_max = params.size() > 0 ? static_cast<int>(params[0]) : 60;
  const int r_max = params.size() > 1 ? static_cast<int>(params[1]) : 8;
  if (n_max < 1 || r_max < 1) throw UsageError("--params expects nmax,rmax >= 1");
  std::vector<TuranBounds> rows;
  for (int n = 1; n <= n_max; ++n) {
    for (int r = 1; r <= std::min(n, r_max); ++r) rows.push_back(turan_edge_bounds(n, r));
  }
  const auto failures = std::count_if(rows.begin(), rows.end(), [](const auto& b) { return !b.pass(); });
  if (fmt == "json") {
    Json arr = Json::array();
    for (const auto& b : rows) arr.push_back(to_json(b));
    print_json(out, {{"rows", std::move(arr)}, {"failures", failures}});
  } else {
    out << "n,r,s,edges,lower,upper,pass\n";
    for (const auto& b : rows) {
      out << b.n << ',' << b.r << ',' << b.s << ',' << b.edges << ',' << format_real(b.lower)
          << ',' << format_real(b.upper) << ',' << bool_text(b.pass()) << '\n';
    }
  }
  return failures == 0 ? kOk : kViolation;
}

int verify_blowup_cmd(const Config& cfg, std::ostream& out) {
  const std::string fmt = format_or(cfg, "csv", {"json", "csv"});
  const int r = cfg.r.value_or(3);
  const auto params = parse_params(cfg.params);
  const int t = params.size() > 0 ? static_cast<int>(params[0]) : 2;
  const int size = params.size() > 1 ? static_cast<int>(params[1]) : 30;
  const int removed = params.size() > 2 ? static_cast<int>(params[2]) : 25;
  const long long trials = params.size() > 3 ? params[3] : 10000;
  if (r < 2 || t < 1 || size < t || removed < 0 || trials < 1) {
    throw UsageError("--r >= 2 and --params t,partSize,removed,trials with partSize >= t");
  }
  const auto parts = blowup_parts(r, size);
  const Graph g = remove_random_cross_edges(blowup_complete(r, size), parts, removed, cfg.seed);
  const long long defect = multipartite_defect(g, parts);
  const BlowupBatch batch = blowup_batch(g, parts, t, cfg.seed, trials, cfg.workers);

  // delta = 1/(t r)^2 admits defect up to delta |V_i||V_j|; the union bound
  // then gives success probability at least 1 - C(r,2) t^2 delta.
  const double delta = 1.0 / (static_cast<double>(t) * t * r * r);
  const bool hypothesis = static_cast<double>(defect) <= delta * size * size + 1e-12;
  const double p = 1.0 - (r * (r - 1) / 2.0) * t * t * delta;
  const double threshold = p - 5.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  const bool ok = batch.validated == batch.successes && (!hypothesis || batch.rate() >= threshold);
  if (fmt == "json") {
    Json j = to_json(batch);
    j["r"] = r;
    j["t"] = t;
    j["defect"] = defect;
    j["hypothesis"] = hypothesis;
    j["threshold"] = real(threshold);
    j["holds"] = ok;
    print_json(out, j);
  } else {
    out << "seed,trials,successes,validated,rate,defect,threshold,pass\n"
        << batch.seed << ',' << batch.trials << ',' << batch.successes << ',' << batch.validated
        << ',' << format_real(batch.rate()) << ',' << defect << ',' << format_real(threshold)
        << ',' << bool_text(ok) << '\n';
  }
  return ok ? kOk : kViolation;
}

int verify_bn_cmd(const Config& cfg, std::ostream& out) {
  const std::string fmt = format_or(cfg, "csv", {"json", "csv"});
  const int r = cfg.r.value_or(2);
  const int lo = cfg.m.value_or(1);
  const int hi = cfg.m_max.value_or(std::max(lo, 8));
  const auto rows = conjecture_bn_probe(r, lo, hi, cfg.workers);
  bool ok = true;
  for (const auto& row : rows) ok = ok && row.holds();
  if (fmt == "json") {
    Json arr = Json::array();
    for (const auto& row : rows) arr.push_back(to_json(row));
    print_json(out, {{"r", r}, {"rows", std::move(arr)}, {"holds", ok}});
  } else {
    out << "r,m,graphs,maxExcess,verdict\n";
    for (const auto& row : rows) {
      out << r << ',' << row.m << ',' << row.graphs << ','
          << (row.max_excess ? format_real(*row.max_excess) : "") << ','
          << (row.holds() ? "bound-holds" : "bound-violated") << '\n';
    }
  }
  return ok ? kOk : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-spectral extremal graph toolkit", "edgespec"};
  app.fallthrough();
  app.require_subcommand(1);

  Config cfg;
  cfg.workers = default_workers();
  app.add_option("--format", cfg.format, "json | csv | edge-list | graph6");
  app.add_option("--tol", cfg.tol, "eigen-solver tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized experiments");
  app.add_option("--workers", cfg.workers, "worker threads (default STL_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--m", cfg.m, "edge count (or first edge count of a range)");
  app.add_option("--m-max", cfg.m_max, "last edge count of a range");
  app.add_option("--k", cfg.k, "clique size of S_{k,m}");
  app.add_option("--r", cfg.r, "part count / clique order parameter");
  app.add_option("--family", cfg.family, "family tag");
  app.add_option("--params", cfg.params, "comma-separated integers");
  app.add_option("--forbid", cfg.forbid, "forbidden graph: family:params, file, or graph6");
  app.add_option("--bound", cfg.bound, "bound on lambda to test in search");
  app.add_option("--constant", cfg.constant, "deviation bound for verify asymptotic");
  app.add_flag("--stable-output", cfg.stable, "omit timing fields");

  auto* gen = app.add_subcommand("gen", "build a family member");
  gen->add_option("family", cfg.inputs, "family tag");
  auto* lambda = app.add_subcommand("lambda", "spectral radius, second eigenvalue, Perron vector");
  lambda->add_option("graph", cfg.inputs, "edge-list file or graph6");
  auto* prof = app.add_subcommand("profile", "forbidden-graph profile");
  prof->add_option("graph", cfg.inputs, "edge-list file or graph6");
  auto* search = app.add_subcommand("search", "exhaustive spectral-extremal search");
  auto* canon = app.add_subcommand("canon", "canonical form");
  canon->add_option("graph", cfg.inputs, "edge-list file or graph6");
  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  auto* v_nosal = verify->add_subcommand("nosal", "triangle-free graphs: lambda^2 <= m");
  auto* v_nik = verify->add_subcommand("nikiforov", "K_{r+1}-free: lambda^2 <= (1-1/r) 2m");
  auto* v_c4 = verify->add_subcommand("c4", "C4-free graphs: lambda <= sqrt(m), star only");
  auto* v_struct = verify->add_subcommand("structure", "shape of the extremal graphs");
  auto* v_asym = verify->add_subcommand("asymptotic", "lambda - sqrt(m) - e(M)/v(M) scaling");
  auto* v_table = verify->add_subcommand("table1", "colour surplus against split graphs");
  auto* v_stab = verify->add_subcommand("stability", "Perron vector perturbation bounds");
  v_stab->add_option("graphs", cfg.inputs, "G and H (optional)");
  auto* v_turan = verify->add_subcommand("turan-bounds", "Turan graph edge counts");
  auto* v_blowup = verify->add_subcommand("blowup-sample", "random blow-up embedding rate");
  auto* v_bn = verify->add_subcommand("bn-conjecture", "lambda1^2 + lambda2^2 probe");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_gen(cfg, out);
    if (*lambda) return cmd_lambda(cfg, out);
    if (*prof) return cmd_profile(cfg, out);
    if (*search) return cmd_search(cfg, out);
    if (*canon) return cmd_canon(cfg, out);
    if (*v_nosal) return verify_nikiforov_cmd(cfg, out, 2);
    if (*v_nik) {
      if (!cfg.r) throw UsageError("verify nikiforov needs --r");
      return verify_nikiforov_cmd(cfg, out, *cfg.r);
    }
    if (*v_c4) return verify_c4(cfg, out);
    if (*v_struct) return verify_structure_cmd(cfg, out);
    if (*v_asym) return verify_asymptotic_cmd(cfg, out);
    if (*v_table) return verify_table1_cmd(cfg, out);
    if (*v_stab) return verify_stability_cmd(cfg, out);
    if (*v_turan) return verify_turan_cmd(cfg, out);
    if (*v_blowup) return verify_blowup_cmd(cfg, out);
    if (*v_bn) return verify_bn_cmd(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace edgespec::cli
