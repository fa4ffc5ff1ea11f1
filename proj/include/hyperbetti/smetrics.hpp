#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperbetti/core.hpp"

namespace hyperbetti {

enum class Side { edges, nodes };

std::string_view to_string(Side side);
/// Accepts "edges" / "nodes"; anything else is nullopt.
std::optional<Side> parse_side(std::string_view text);

/// Intersection graph of a hypergraph's edges (or nodes) at width s.
///
/// Vertices are the edges with at least s members (nodes with degree at
/// least s on the node side), sorted by id. Two vertices are adjacent when
/// they share at least s members.
struct SLineGraph {
  struct Link {
    std::size_t u;  // u < v
    std::size_t v;
    std::size_t intersection_size;
    friend bool operator==(const Link&, const Link&) = default;
  };

  std::size_t s = 1;
  Side side = Side::edges;
  std::vector<std::string> vertices;
  std::vector<Link> links;                         // sorted by (u, v)
  std::vector<std::vector<std::size_t>> neighbors;  // ascending

  std::size_t size() const { return vertices.size(); }
  std::optional<std::size_t> index_of(std::string_view id) const;
};

/// Throws InvalidS when s == 0.
SLineGraph s_line_graph(const Hypergraph& h, std::size_t s, Side side = Side::edges);

// Graph-level algorithms. Everything below that takes a Hypergraph builds
// the line graph first and forwards here.

inline constexpr std::size_t unreachable = static_cast<std::size_t>(-1);

/// Hop counts from `source`; `unreachable` where there is no path.
std::vector<std::size_t> bfs_distances(const SLineGraph& g, std::size_t source);

/// Components as vertex index lists, each ascending, ordered by first member.
std::vector<std::vector<std::size_t>> components(const SLineGraph& g);

std::vector<std::size_t> eccentricities(const SLineGraph& g);
std::optional<std::size_t> diameter(const SLineGraph& g);

std::vector<double> betweenness(const SLineGraph& g, bool normalized = false);
std::vector<double> closeness(const SLineGraph& g, bool normalized = false);
std::vector<double> harmonic(const SLineGraph& g, bool normalized = false);

// Hypergraph-level operations.

using Components = std::vector<std::vector<std::string>>;
using Centrality = std::map<std::string, double>;

Components s_connected_components(const Hypergraph& h, std::size_t s, Side side = Side::edges);

/// nullopt means unreachable. Throws UnknownVertex if either endpoint is
/// not a vertex of the s-line graph (including ones too small for s).
std::optional<std::size_t> s_distance(const Hypergraph& h, std::size_t s, Side side,
                                      std::string_view from, std::string_view to);

std::size_t s_eccentricity(const Hypergraph& h, std::size_t s, Side side, std::string_view u);
std::map<std::string, std::size_t> s_eccentricities(const Hypergraph& h, std::size_t s,
                                                    Side side = Side::edges);

/// Largest eccentricity within the largest component; nullopt if the line
/// graph has no vertices. Ties between equally large components go to the
/// one containing the lexicographically smallest vertex.
std::optional<std::size_t> s_diameter(const Hypergraph& h, std::size_t s, Side side = Side::edges);

/// Unnormalized by default. Normalized betweenness divides by
/// (n-1)(n-2)/2; normalized closeness scales by (n_c-1)/(n-1); normalized
/// harmonic divides by n-1.
Centrality s_betweenness(const Hypergraph& h, std::size_t s, Side side = Side::edges,
                         bool normalized = false);
Centrality s_closeness(const Hypergraph& h, std::size_t s, Side side = Side::edges,
                       bool normalized = false);
Centrality s_harmonic(const Hypergraph& h, std::size_t s, Side side = Side::edges,
                      bool normalized = false);

nlohmann::ordered_json to_json(const SLineGraph& g);
nlohmann::ordered_json components_to_json(const Components& c);
/// Values rounded to 12 significant digits.
nlohmann::ordered_json centrality_to_json(const Centrality& c);

}  // namespace hyperbetti
