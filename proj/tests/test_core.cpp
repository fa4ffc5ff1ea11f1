#include <random>

#include "doctest.h"
#include "hyperbetti/core.hpp"
#include "hyperbetti/error.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hyperbetti;
using hyperbetti::testing::h0;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected hyperbetti::Error");
  return ErrorCode::SchemaViolation;
}

}  // namespace

TEST_CASE("build counts distinct ids and pairs") {
  auto h = h0();
  CHECK(h.num_nodes() == 6);
  CHECK(h.num_edges() == 4);
  CHECK(h.num_incidences() == 9);
  CHECK(h.members_of("B") == std::vector<std::string>{"2", "3", "4"});
  CHECK(h.memberships_of("4") == std::vector<std::string>{"B", "C"});
}

TEST_CASE("build of nothing is empty") {
  auto h = Hypergraph::build({});
  CHECK(h.num_nodes() == 0);
  CHECK(h.num_edges() == 0);
  CHECK(h.empty());
}

TEST_CASE("duplicate incidences collapse, last row wins") {
  auto h = Hypergraph::build({{"A", "1", 2.0, {{"k", text_value("first")}}},
                              {"A", "1", 5.0, {{"k", text_value("second")}}}});
  REQUIRE(h.num_incidences() == 1);
  CHECK(h.incidences()[0].props.weight == 5.0);
  CHECK(std::get<std::string>(h.incidences()[0].props.attrs.at("k")) == "second");
}

TEST_CASE("identifiers are trimmed and must be non-empty") {
  auto h = Hypergraph::build({{" A ", "\t1", std::nullopt, {}}});
  CHECK(h.has_edge("A"));
  CHECK(h.has_node("1"));
  CHECK(code_of([] { Hypergraph::build({{"  ", "1", std::nullopt, {}}}); }) ==
        ErrorCode::EmptyIdentifier);
  CHECK(code_of([] { Hypergraph::build({}, {{"", Entity{}}}); }) == ErrorCode::EmptyIdentifier);
}

TEST_CASE("identifier equality is case-sensitive") {
  auto h = testing::from_pairs({{"a", "x"}, {"A", "X"}});
  CHECK(h.num_edges() == 2);
  CHECK(h.num_nodes() == 2);
}

TEST_CASE("non-finite weights are rejected") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(code_of([&] { Hypergraph::build({{"A", "1", nan, {}}}); }) == ErrorCode::NonFiniteWeight);
  CHECK(code_of([&] { Hypergraph::build({}, {{"n", Entity{inf, {}}}}); }) ==
        ErrorCode::NonFiniteWeight);
  CHECK(code_of([&] { Hypergraph::build({{"A", "1", 1.0, {{"x", AttributeValue(inf)}}}}); }) ==
        ErrorCode::NonFiniteWeight);
}

TEST_CASE("property tables register isolated nodes and empty edges") {
  auto h = Hypergraph::build({{"A", "1", std::nullopt, {}}}, {{"lonely", Entity{}}},
                             {{"E", Entity{3.0, {}}}});
  CHECK(h.num_nodes() == 2);
  CHECK(h.num_edges() == 2);
  CHECK(h.members_of("E").empty());
  CHECK(h.edge("E").weight == 3.0);
  CHECK(h.node("1").is_default());
  CHECK(code_of([&] { h.node("missing"); }) == ErrorCode::UnknownNode);
  CHECK(code_of([&] { h.edge("missing"); }) == ErrorCode::UnknownEdge);
}

TEST_CASE("metadata name is lifted out and hif-version dropped") {
  auto h = Hypergraph::build({}, {}, {}, {}, {{"name", "lesmis"}, {"hif-version", "x"}, {"k", 1}});
  CHECK(h.name() == "lesmis");
  CHECK(h.metadata() == nlohmann::json{{"k", 1}});
}

TEST_CASE("dual transposes the incidence store") {
  auto d = dual(h0());
  CHECK(d.edges() == std::vector<std::string>{"1", "2", "3", "4", "5", "6"});
  CHECK(d.members_of("2") == std::vector<std::string>{"A", "B"});
  CHECK(dual(d) == h0());
  CHECK(dual(Hypergraph{}).empty());

  auto with_extras = Hypergraph::build({{"A", "1", 2.5, {}}}, {{"iso", Entity{}}},
                                       {{"empty", Entity{}}});
  auto t = dual(with_extras);
  CHECK(t.has_edge("iso"));
  CHECK(t.members_of("iso").empty());
  CHECK(t.has_node("empty"));
  CHECK(t.incidences()[0].props.weight == 2.5);
}

TEST_CASE("toplexes") {
  CHECK(toplexes(h0()) == IdSet{"A", "B", "C", "D"});
  auto with_sub = testing::from_pairs({{"A", "1"}, {"A", "2"}, {"A", "3"}, {"B", "2"}, {"B", "3"},
                                       {"B", "4"}, {"C", "4"}, {"C", "5"}, {"D", "6"},
                                       {"E", "2"}, {"E", "3"}});
  CHECK(toplexes(with_sub) == IdSet{"A", "B", "C", "D"});
  CHECK(toplexes(testing::from_pairs({{"only", "x"}})) == IdSet{"only"});

  SUBCASE("identical edges are all kept") {
    auto twins = testing::from_edges({{"P", {"1", "2"}}, {"Q", {"1", "2"}}, {"R", {"1"}}});
    CHECK(toplexes(twins) == IdSet{"P", "Q"});
  }
}

TEST_CASE("degree thresholds on edge size") {
  auto h = h0();
  CHECK(degree(h, "2", 1) == 2);
  CHECK(degree(h, "6", 2) == 0);
  CHECK(degree(h, "4", 3) == 1);
  auto iso = Hypergraph::build({}, {{"z", Entity{}}});
  CHECK(degree(iso, "z") == 0);
  CHECK(code_of([&] { degree(h, "nope"); }) == ErrorCode::UnknownNode);
}

TEST_CASE("restrict") {
  auto h = h0();
  auto ab = restrict_to(h, std::nullopt, IdSet{"A", "B"});
  CHECK(ab.nodes() == std::vector<std::string>{"1", "2", "3", "4"});
  CHECK(ab.num_incidences() == 6);

  IdSet all_nodes(h.nodes().begin(), h.nodes().end());
  IdSet all_edges(h.edges().begin(), h.edges().end());
  CHECK(restrict_to(h, all_nodes, all_edges) == h);

  auto none = restrict_to(h, IdSet{}, std::nullopt);
  CHECK(none.num_incidences() == 0);
  CHECK(none.num_edges() == 4);
  CHECK(none.num_nodes() == 0);

  auto with_iso = Hypergraph::build({{"A", "1", std::nullopt, {}}, {"B", "2", std::nullopt, {}}},
                                    {{"lonely", Entity{}}});
  CHECK(restrict_to(with_iso, std::nullopt, IdSet{"A"}).nodes() ==
        std::vector<std::string>{"1", "lonely"});

  CHECK(code_of([&] { restrict_to(h, IdSet{"9"}, std::nullopt); }) == ErrorCode::UnknownNode);
  CHECK(code_of([&] { restrict_to(h, std::nullopt, IdSet{"Z"}); }) == ErrorCode::UnknownEdge);
}

TEST_CASE("bipartite view") {
  auto g = bipartite(h0());
  CHECK(g.vertices.size() == 10);
  CHECK(g.links.size() == 9);
  CHECK(g.vertices[0].part == BipartiteGraph::Part::node);
  CHECK(g.vertices[6].id == "A");
  CHECK(g.vertices[6].part == BipartiteGraph::Part::edge);
  CHECK(bipartite(Hypergraph{}).vertices.empty());
  auto one = bipartite(testing::from_pairs({{"e", "n"}}));
  CHECK(one.vertices.size() == 2);
  CHECK(one.links.size() == 1);
}

TEST_CASE("stats") {
  auto s = stats(h0());
  CHECK(s.nodes == 6);
  CHECK(s.edges == 4);
  CHECK(s.incidences == 9);
  CHECK(s.edge_sizes == std::map<std::size_t, std::size_t>{{3, 2}, {2, 1}, {1, 1}});
  CHECK(s.node_degrees == std::map<std::size_t, std::size_t>{{1, 3}, {2, 3}});
  CHECK(s.isolated_nodes == 0);

  auto empty = stats(Hypergraph{});
  CHECK(empty.nodes == 0);
  CHECK(empty.edges == 0);
  CHECK(empty.incidences == 0);
  CHECK(empty.edge_sizes.empty());

  auto one = stats(testing::from_pairs({{"e", "n"}}));
  CHECK(one.nodes == 1);
  CHECK(one.edges == 1);

  auto extras = stats(Hypergraph::build({}, {{"n", Entity{}}}, {{"e", Entity{}}}));
  CHECK(extras.isolated_nodes == 1);
  CHECK(extras.empty_edges == 1);
  CHECK(to_json(s).dump() ==
        R"({"nodes":6,"edges":4,"incidences":9,"edge_sizes":{"1":1,"2":1,"3":2},)"
        R"("node_degrees":{"1":3,"2":3},"isolated_nodes":0,"empty_edges":0})");
}

TEST_CASE("properties on random hypergraphs") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    auto h = testing::random_hypergraph(rng);
    CAPTURE(trial);

    CHECK(dual(dual(h)) == h);

    auto g = bipartite(h);
    CHECK(g.links.size() == h.num_incidences());
    CHECK(g.vertices.size() == h.num_nodes() + h.num_edges());

    CHECK(toplexes(h) == testing::oracle::toplexes(h));

    for (const auto& n : h.nodes()) {
      for (std::size_t s = 1; s < 6; ++s) CHECK(degree(h, n, s + 1) <= degree(h, n, s));
    }

    IdSet keep_nodes;
    for (std::size_t i = 0; i < h.num_nodes(); i += 2) keep_nodes.insert(h.nodes()[i]);
    auto once = restrict_to(h, keep_nodes, std::nullopt);
    CHECK(restrict_to(once, keep_nodes, std::nullopt) == once);
  }
}
