#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperbetti/core.hpp"

namespace hyperbetti::testing {

inline Hypergraph from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<IncidenceInput> rows;
  for (const auto& [e, n] : pairs) rows.push_back({e, n, std::nullopt, {}});
  return Hypergraph::build(std::move(rows));
}

inline Hypergraph from_edges(const std::vector<std::pair<std::string, std::vector<std::string>>>& edges) {
  std::vector<IncidenceInput> rows;
  for (const auto& [e, nodes] : edges) {
    for (const auto& n : nodes) rows.push_back({e, n, std::nullopt, {}});
  }
  return Hypergraph::build(std::move(rows));
}

/// A={1,2,3}, B={2,3,4}, C={4,5}, D={6}.
inline Hypergraph h0() {
  return from_pairs({{"A", "1"}, {"A", "2"}, {"A", "3"}, {"B", "2"}, {"B", "3"},
                     {"B", "4"}, {"C", "4"}, {"C", "5"}, {"D", "6"}});
}

inline Hypergraph hollow_triangle() {
  return from_edges({{"ab", {"a", "b"}}, {"bc", {"b", "c"}}, {"ac", {"a", "c"}}});
}

inline Hypergraph filled_triangle() { return from_edges({{"abc", {"a", "b", "c"}}}); }

inline Hypergraph tetrahedron_boundary() {
  return from_edges({{"f0", {"1", "2", "3"}},
                     {"f1", {"1", "2", "4"}},
                     {"f2", {"1", "3", "4"}},
                     {"f3", {"2", "3", "4"}}});
}

inline Hypergraph two_hollow_triangles() {
  return from_edges({{"ab", {"a", "b"}}, {"bc", {"b", "c"}}, {"ac", {"a", "c"}},
                     {"xy", {"x", "y"}}, {"yz", {"y", "z"}}, {"xz", {"x", "z"}}});
}

}  // namespace hyperbetti::testing
