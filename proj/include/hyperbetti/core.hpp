#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hyperbetti/attributes.hpp"
#include "json.hpp"

namespace hyperbetti {

using EntityTable = std::map<std::string, Entity, std::less<>>;
using IdSet = std::set<std::string, std::less<>>;

/// Trims surrounding whitespace; throws EmptyIdentifier if nothing is left.
std::string normalize_id(std::string_view raw);

/// One row handed to Hypergraph::build.
struct IncidenceInput {
  std::string edge;
  std::string node;
  std::optional<double> weight;
  Attributes attrs;
};

struct Incidence {
  std::string edge;
  std::string node;
  Entity props;

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// Immutable incidence store with node, edge and incidence property tables.
///
/// Nodes and edges are kept in lexicographic id order and addressed either
/// by id or by their dense index into that order. Isolated nodes and empty
/// edges are allowed; they live in the property tables only.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Duplicate (edge, node) rows collapse with the last row winning.
  /// Every id referenced by an incidence is registered with default
  /// properties if absent from the supplied tables. A string "name" entry
  /// in `metadata` is lifted into `name` when `name` is empty.
  static Hypergraph build(std::vector<IncidenceInput> incidences, EntityTable node_props = {},
                          EntityTable edge_props = {}, std::string name = {},
                          nlohmann::json metadata = nlohmann::json::object());

  const std::string& name() const { return name_; }
  const nlohmann::json& metadata() const { return metadata_; }

  std::size_t num_nodes() const { return node_ids_.size(); }
  std::size_t num_edges() const { return edge_ids_.size(); }
  std::size_t num_incidences() const { return incidences_.size(); }
  bool empty() const { return node_ids_.empty() && edge_ids_.empty(); }

  const std::vector<std::string>& nodes() const { return node_ids_; }
  const std::vector<std::string>& edges() const { return edge_ids_; }
  /// Sorted by (edge, node).
  const std::vector<Incidence>& incidences() const { return incidences_; }
  const EntityTable& node_props() const { return node_props_; }
  const EntityTable& edge_props() const { return edge_props_; }

  bool has_node(std::string_view id) const { return node_props_.contains(id); }
  bool has_edge(std::string_view id) const { return edge_props_.contains(id); }
  const Entity& node(std::string_view id) const;
  const Entity& edge(std::string_view id) const;

  std::optional<std::size_t> node_index(std::string_view id) const;
  std::optional<std::size_t> edge_index(std::string_view id) const;

  /// Node indices of an edge, ascending.
  const std::vector<std::size_t>& members(std::size_t edge) const { return edge_members_[edge]; }
  /// Edge indices containing a node, ascending.
  const std::vector<std::size_t>& memberships(std::size_t node) const {
    return node_memberships_[node];
  }

  std::vector<std::string> members_of(std::string_view edge) const;
  std::vector<std::string> memberships_of(std::string_view node) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.name_ == b.name_ && a.metadata_ == b.metadata_ && a.node_props_ == b.node_props_ &&
           a.edge_props_ == b.edge_props_ && a.incidences_ == b.incidences_;
  }

 private:
  std::string name_;
  nlohmann::json metadata_ = nlohmann::json::object();
  EntityTable node_props_;
  EntityTable edge_props_;
  std::vector<Incidence> incidences_;

  std::vector<std::string> node_ids_;
  std::vector<std::string> edge_ids_;
  std::vector<std::vector<std::size_t>> edge_members_;
  std::vector<std::vector<std::size_t>> node_memberships_;
};

/// Transpose: nodes become edges and edges become nodes.
Hypergraph dual(const Hypergraph& h);

/// Maximal edges. Edges sharing an identical node set are all kept.
IdSet toplexes(const Hypergraph& h);

/// Number of edges containing `node` that have at least `s` members.
std::size_t degree(const Hypergraph& h, std::string_view node, std::size_t s = 1);

/// Sub-hypergraph on the kept nodes and edges. A nullopt edge set keeps
/// every edge; a nullopt node set keeps nodes still reached by a kept edge
/// plus nodes that were isolated already. Edges emptied by node removal
/// stay registered.
Hypergraph restrict_to(const Hypergraph& h, const std::optional<IdSet>& keep_nodes,
                       const std::optional<IdSet>& keep_edges);

struct BipartiteGraph {
  enum class Part { node, edge };
  struct Vertex {
    std::string id;
    Part part;
  };
  /// Nodes first (sorted), then edges (sorted).
  std::vector<Vertex> vertices;
  /// (node vertex index, edge vertex index), one per incidence.
  std::vector<std::pair<std::size_t, std::size_t>> links;
};

BipartiteGraph bipartite(const Hypergraph& h);

struct Stats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t incidences = 0;
  std::map<std::size_t, std::size_t> edge_sizes;    // size -> edge count
  std::map<std::size_t, std::size_t> node_degrees;  // degree -> node count
  std::size_t isolated_nodes = 0;
  std::size_t empty_edges = 0;
};

Stats stats(const Hypergraph& h);

nlohmann::ordered_json to_json(const Stats& s);

}  // namespace hyperbetti
