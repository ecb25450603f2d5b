#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "edgespec/cli.hpp"
#include "edgespec/generators.hpp"
#include "edgespec/io.hpp"

using namespace edgespec;
using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("gen split") {
  const Run r = run({"gen", "split", "--k", "2", "--m", "7", "--format", "edge-list"});
  CHECK(r.code == cli::kOk);
  const Graph g = parse_edge_list(r.out);
  CHECK(g.num_vertices() == 5);
  CHECK(g.num_edges() == 7);
  CHECK(g == split_graph(2, 7));
  const Run g6 = run({"gen", "cycle", "--params", "5", "--format", "graph6"});
  CHECK(g6.out == to_graph6(cycle(5)) + "\n");
}

TEST_CASE("profile of theta graphs") {
  const Run r = run({"profile", "--family", "theta", "--params", "1,3,3"});
  REQUIRE(r.code == cli::kOk);
  const json j = json::parse(r.out);
  CHECK(j["chromatic"] == 2);
  CHECK(j["almostBipartite"] == true);
  const Run odd = run({"profile", "--family", "theta", "--params", "1,2,3"});
  const json k = json::parse(odd.out);
  CHECK(k["chromatic"] == 3);
  CHECK(k["colorCritical"] == true);
  CHECK(k["almostBipartite"] == true);
}

TEST_CASE("verify nikiforov prints a slack column and exits 0") {
  const Run r = run({"verify", "nikiforov", "--r", "2", "--m-max", "8"});
  CHECK(r.code == cli::kOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "forbidden,m,maxLambda,bound,slack,verdict");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.find("bound-holds") != std::string::npos);
  }
  CHECK(rows == 8);
}

TEST_CASE("search reports and verdicts") {
  const Run r = run({"search", "--forbid", "cycle:4", "--m", "6", "--stable-output"});
  REQUIRE(r.code == cli::kOk);
  const json j = json::parse(r.out);
  CHECK(j["m"] == 6);
  CHECK(j["verdict"] == "no-bound");
  CHECK_FALSE(j.contains("elapsedMs"));
  const Run v = run({"search", "--forbid", "complete:3", "--m", "4", "--bound", "1.5"});
  CHECK(v.code == cli::kViolation);
  const Run range = run({"search", "--forbid", "complete:3", "--m", "2", "--m-max", "4",
                         "--format", "csv"});
  CHECK(range.code == cli::kOk);
  CHECK(std::count(range.out.begin(), range.out.end(), '\n') == 4);
}

TEST_CASE("stable output is byte-identical across worker counts") {
  const Run a = run({"search", "--forbid", "book:2,2", "--m", "8", "--stable-output", "--workers", "1"});
  const Run b = run({"search", "--forbid", "book:2,2", "--m", "8", "--stable-output", "--workers", "3"});
  CHECK(a.out == b.out);
  const Run s1 = run({"verify", "stability", "--params", "40", "--seed", "9", "--format", "json"});
  const Run s2 = run({"verify", "stability", "--params", "40", "--seed", "9", "--format", "json"});
  CHECK(s1.out == s2.out);
}

TEST_CASE("verify suites exit codes") {
  CHECK(run({"verify", "nosal", "--m-max", "5"}).code == cli::kOk);
  CHECK(run({"verify", "c4"}).code == cli::kOk);
  CHECK(run({"verify", "c4", "--m", "8"}).code == cli::kViolation);
  CHECK(run({"verify", "table1"}).code == cli::kOk);
  CHECK(run({"verify", "turan-bounds", "--params", "20,5"}).code == cli::kOk);
  CHECK(run({"verify", "blowup-sample", "--params", "2,30,25,500"}).code == cli::kOk);
  CHECK(run({"verify", "bn-conjecture", "--m-max", "5"}).code == cli::kOk);
  CHECK(run({"verify", "structure", "--forbid", "kst_plus:3,3", "--m", "6"}).code == cli::kOk);
  CHECK(run({"verify", "asymptotic", "--forbid", "kst_plus:3,3", "--params", "1001"}).code ==
        cli::kOk);
  CHECK(run({"verify", "asymptotic", "--forbid", "kst_plus:3,3", "--params", "1000"}).code ==
        cli::kViolation);
}

TEST_CASE("stability on two graphs") {
  const std::string g = to_graph6(star(9));
  const std::string h = to_graph6(complete_bipartite(5, 5));
  const Run r = run({"verify", "stability", g, h, "--format", "json"});
  CHECK(r.code == cli::kOk);
  CHECK(json::parse(r.out)["editCount"] == 24);
}

TEST_CASE("lambda and canon") {
  const Run r = run({"lambda", to_graph6(complete(4))});
  REQUIRE(r.code == cli::kOk);
  CHECK(json::parse(r.out)["lambda1"] == 3.0);
  const Run c1 = run({"canon", to_graph6(path(4))});
  const Run c2 = run({"canon", to_graph6(relabel(path(4), std::vector<int>{2, 0, 3, 1}))});
  CHECK(json::parse(c1.out)["key"] == json::parse(c2.out)["key"]);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"gen", "split", "--bogus"}).code == cli::kUsage);
  CHECK(run({"gen", "nope"}).code == cli::kUsage);
  CHECK(run({"lambda", "not-a-graph-!!"}).code == cli::kUsage);
  CHECK(run({"lambda", "C~", "--format", "graph6"}).code == cli::kUsage);
  CHECK(run({"search", "--forbid", "cycle:4"}).code == cli::kUsage);
  CHECK(run({"verify", "nikiforov"}).code == cli::kUsage);
  CHECK(run({"gen", "cycle", "--params", "5", "--workers", "0"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}
