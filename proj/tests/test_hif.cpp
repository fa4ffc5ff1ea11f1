#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "hyperbetti/csv.hpp"
#include "hyperbetti/error.hpp"
#include "hyperbetti/hif.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"

using namespace hyperbetti;

namespace {

struct Failure {
  ErrorCode code;
  std::string path;
};

Failure failure(std::string_view doc) {
  try {
    parse_hif(doc);
  } catch (const Error& e) {
    return {e.code(), e.path()};
  }
  FAIL("document was accepted: " << doc);
  return {};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("minimal document") {
  auto h = parse_hif(R"({"incidences":[{"edge":"A","node":"1"}]})");
  CHECK(h.num_edges() == 1);
  CHECK(h.num_nodes() == 1);
  CHECK(parse_hif(R"({"incidences":[]})").empty());
}

TEST_CASE("numeric ids, weights and attrs") {
  auto h = parse_hif(R"({
    "network-type": "undirected",
    "metadata": {"name": "demo", "hif-version": "artifact-1"},
    "nodes": [{"node": 1, "weight": 2, "attrs": {"color": "red"}, "extra": true}],
    "edges": [{"edge": "E", "attrs": {"n": null}}],
    "incidences": [{"edge": "E", "node": 1, "weight": 0.5, "role": "x"}]
  })");
  CHECK(h.name() == "demo");
  CHECK(h.node("1").weight == 2.0);
  CHECK(std::get<std::string>(h.node("1").attrs.at("color")) == "red");
  CHECK(std::get<bool>(h.node("1").attrs.at("extra")));
  CHECK(std::holds_alternative<std::nullptr_t>(h.edge("E").attrs.at("n")));
  CHECK(h.incidences()[0].props.weight == 0.5);
  CHECK(std::get<std::string>(h.incidences()[0].props.attrs.at("role")) == "x");
}

TEST_CASE("unknown top-level keys become metadata") {
  auto h = parse_hif(R"({"incidences":[],"source":"survey"})");
  CHECK(h.metadata().at("source") == "survey");
}

TEST_CASE("rejections carry a code and a pointer") {
  auto f = failure("{");
  CHECK(f.code == ErrorCode::MalformedJson);
  CHECK(failure(R"({"incidences":[{"edge":"A","node":"1","weight":1e999}]})").code ==
        ErrorCode::MalformedJson);
  CHECK(failure("[]").code == ErrorCode::SchemaViolation);
  CHECK(failure("{}").code == ErrorCode::SchemaViolation);

  f = failure(R"({"network-type":"directed","incidences":[]})");
  CHECK(f.code == ErrorCode::SchemaViolation);
  CHECK(f.path == "/network-type");

  f = failure(R"({"incidences":[{"edge":"A","node":"1"},{"edge":"A","node":"1"}]})");
  CHECK(f.code == ErrorCode::DuplicateIncidence);
  CHECK(f.path == "/incidences/1");

  f = failure(R"({"incidences":[{"edge":"A","node":"1","weight":"heavy"}]})");
  CHECK(f.code == ErrorCode::SchemaViolation);
  CHECK(f.path == "/incidences/0/weight");

  f = failure(R"({"incidences":[{"edge":"  ","node":"1"}]})");
  CHECK(f.code == ErrorCode::EmptyIdentifier);
  CHECK(f.path == "/incidences/0/edge");

  f = failure(R"({"incidences":[{"edge":"A"}]})");
  CHECK(f.path == "/incidences/0");

  f = failure(R"({"nodes":[{"node":"x","attrs":{"a/b":[1]}}],"incidences":[]})");
  CHECK(f.code == ErrorCode::SchemaViolation);
  CHECK(f.path == "/nodes/0/attrs/a~1b");

  f = failure(R"({"nodes":[{"node":"x"},{"node":"x"}],"incidences":[]})");
  CHECK(f.path == "/nodes/1");

  CHECK(failure(R"({"metadata":[],"incidences":[]})").path == "/metadata");
  CHECK(failure(R"({"incidences":{}})").path == "/incidences");
}

TEST_CASE("validate lists every problem") {
  auto d = validate_hif(R"({"incidences":[{"edge":"","node":"1"},{"edge":"A","node":"1","weight":"x"}]})");
  CHECK(d.size() == 2);
  CHECK(has_errors(d));
  CHECK(validate_hif(R"({"incidences":[]})").empty());

  auto w = validate_hif(R"({"metadata":{"hif-version":"9.9"},"incidences":[]})");
  REQUIRE(w.size() == 1);
  CHECK(w[0].severity == Diagnostic::Severity::warning);
  CHECK_FALSE(has_errors(w));
  CHECK(to_json(w[0]).at("severity") == "warning");
}

TEST_CASE("canonical emission") {
  const auto text = emit_hif(testing::h0());
  CHECK(text == slurp(std::string(HYPERBETTI_FIXTURES) + "/h0.hif.json"));
  CHECK(text.back() == '\n');
  CHECK(text.rfind("{\n  \"network-type\": \"undirected\",\n  \"metadata\": {\n", 0) == 0);
  CHECK(parse_hif(text) == testing::h0());
}

TEST_CASE("csv and hif agree on H0") {
  auto from_csv = parse_csv(slurp(std::string(HYPERBETTI_FIXTURES) + "/h0.csv"));
  CHECK(from_csv == testing::h0());
}

TEST_CASE("round trip preserves everything") {
  std::mt19937_64 rng(2025);
  for (int trial = 0; trial < 200; ++trial) {
    auto h = testing::random_rich_hypergraph(rng);
    CAPTURE(trial);
    const auto once = emit_hif(h);
    auto back = parse_hif(once);
    CHECK(back == h);
    CHECK(emit_hif(back) == once);
  }
}
