#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hyperbetti/cli.hpp"
#include "hyperbetti/hif.hpp"
#include "support/fixtures.hpp"

using namespace hyperbetti;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(HYPERBETTI_FIXTURES) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("components from stdin") {
  auto r = run({"components", "--s", "2", "--side", "edges"}, emit_hif(testing::h0()));
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out == "[[\"A\",\"B\"],[\"C\"]]\n");
  CHECK(r.err.empty());
}

TEST_CASE("homology of a hollow triangle") {
  auto r = run({"homology", "--kmax", "2", "-"}, emit_hif(testing::hollow_triangle()));
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out.rfind(R"({"betti":[1,1,0],)", 0) == 0);
}

TEST_CASE("convert round trip through both formats") {
  auto to_hif = run({"convert", "--to", "hif", fixture("h0.csv")});
  REQUIRE(to_hif.code == cli::exit_ok);
  CHECK(to_hif.out == slurp(fixture("h0.hif.json")));
  auto back = run({"convert", "--to", "csv"}, to_hif.out);
  CHECK(back.out == slurp(fixture("h0.csv")));
}

TEST_CASE("analytics from a file") {
  CHECK(run({"stats", fixture("h0.csv")}).out ==
        R"({"nodes":6,"edges":4,"incidences":9,"edge_sizes":{"1":1,"2":1,"3":2},)"
        R"("node_degrees":{"1":3,"2":3},"isolated_nodes":0,"empty_edges":0})"
        "\n");
  CHECK(run({"toplexes", fixture("h0.hif.json")}).out == "[\"A\",\"B\",\"C\",\"D\"]\n");
  CHECK(run({"distance", "--from", "A", "--to", "C", fixture("h0.csv")}).out ==
        R"({"from":"A","to":"C","s":1,"side":"edges","distance":2})"
        "\n");
  CHECK(run({"distance", "--from", "A", "--to", "D", "--output", "text", fixture("h0.csv")}).out ==
        "unreachable\n");
  CHECK(run({"centrality", "--kind", "harmonic", fixture("h0.csv")}).out ==
        R"({"A":1.5,"B":2.0,"C":1.5,"D":0.0})"
        "\n");
  CHECK(run({"centrality", "--kind", "eccentricity", "--side", "nodes", fixture("h0.csv")}).out ==
        R"({"1":3,"2":2,"3":2,"4":2,"5":3,"6":0})"
        "\n");
  CHECK(run({"components", "--output", "text", fixture("h0.csv")}).out == "A B C\nD\n");
}

TEST_CASE("format override") {
  auto r = run({"stats", "--format", "csv", "-"}, "edge,node\nA,1\n");
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out.rfind(R"({"nodes":1,)", 0) == 0);
}

TEST_CASE("usage errors exit 1 with a hint") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"components", "--s", "0"},
           {"components", "--side", "both"},
           {"homology", "--kmax", "11"},
           {"distance", "--from", "A"},
           {"stats", "/no/such/file.csv"},
           {"convert"}}) {
    auto r = run(args);
    CAPTURE(args.size());
    CHECK(r.code == cli::exit_usage);
    CHECK(r.err.find("hint:") != std::string::npos);
  }
}

TEST_CASE("data errors exit 2") {
  auto r = run({"stats"}, "{not json");
  CHECK(r.code == cli::exit_data);
  CHECK(r.err.rfind("error: MalformedJson", 0) == 0);
  r = run({"distance", "--from", "A", "--to", "Q", fixture("h0.csv")});
  CHECK(r.code == cli::exit_data);
  CHECK(r.err.find("UnknownVertex") != std::string::npos);
}

TEST_CASE("validate reports diagnostics") {
  auto good = run({"validate"}, emit_hif(testing::h0()));
  CHECK(good.code == cli::exit_ok);
  CHECK(good.out == "[]\n");
  auto bad = run({"validate"}, R"({"incidences":[{"edge":"A","node":"1"},{"edge":"A","node":"1"}]})");
  CHECK(bad.code == cli::exit_data);
  CHECK(bad.out.find("DuplicateIncidence") != std::string::npos);
  CHECK(bad.out.find("/incidences/1") != std::string::npos);
}

TEST_CASE("layout output") {
  auto a = run({"layout", "--seed", "42", fixture("h0.csv")});
  auto b = run({"layout", "--seed", "42", fixture("h0.csv")});
  CHECK(a.code == cli::exit_ok);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"seed\":42") != std::string::npos);
  auto svg = run({"layout", "--svg", fixture("h0.csv")});
  CHECK(svg.out.find("<svg") != std::string::npos);
  CHECK(run({"layout", "--hull-padding", "2", fixture("h0.csv")}).code == cli::exit_data);
}

TEST_CASE("help exits 0") {
  auto r = run({"--help"});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out.find("components") != std::string::npos);
}
