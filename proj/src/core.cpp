#include "hyperbetti/core.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "hyperbetti/error.hpp"

namespace hyperbetti {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyIdentifier: return "EmptyIdentifier";
    case ErrorCode::NonFiniteWeight: return "NonFiniteWeight";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::InvalidS: return "InvalidS";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorCode::EdgeTooLarge: return "EdgeTooLarge";
    case ErrorCode::MalformedJson: return "MalformedJson";
    case ErrorCode::MalformedCsv: return "MalformedCsv";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::DuplicateIncidence: return "DuplicateIncidence";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::MissingPosition: return "MissingPosition";
    case ErrorCode::InconsistentDocument: return "InconsistentDocument";
    case ErrorCode::PortInUse: return "PortInUse";
  }
  return "Unknown";
}

std::string normalize_id(std::string_view raw) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!raw.empty() && is_space(raw.front())) raw.remove_prefix(1);
  while (!raw.empty() && is_space(raw.back())) raw.remove_suffix(1);
  if (raw.empty()) throw Error(ErrorCode::EmptyIdentifier, "identifier is empty");
  return std::string(raw);
}

namespace {

EntityTable normalize_table(EntityTable table, const char* kind) {
  EntityTable out;
  for (auto& [id, entity] : table) {
    auto key = normalize_id(id);
    check_finite(entity, std::string(kind) + " '" + key + "'");
    out.insert_or_assign(std::move(key), std::move(entity));
  }
  return out;
}

}  // namespace

Hypergraph Hypergraph::build(std::vector<IncidenceInput> incidences, EntityTable node_props,
                             EntityTable edge_props, std::string name, nlohmann::json metadata) {
  Hypergraph h;
  h.node_props_ = normalize_table(std::move(node_props), "node");
  h.edge_props_ = normalize_table(std::move(edge_props), "edge");

  std::map<std::pair<std::string, std::string>, Entity> pairs;
  for (auto& row : incidences) {
    auto edge = normalize_id(row.edge);
    auto node = normalize_id(row.node);
    Entity props{row.weight.value_or(1.0), std::move(row.attrs)};
    check_finite(props, "incidence (" + edge + ", " + node + ")");
    h.edge_props_.try_emplace(edge);
    h.node_props_.try_emplace(node);
    pairs.insert_or_assign({std::move(edge), std::move(node)}, std::move(props));
  }

  h.incidences_.reserve(pairs.size());
  for (auto& [key, props] : pairs) {
    h.incidences_.push_back({key.first, key.second, std::move(props)});
  }

  if (metadata.is_null()) metadata = nlohmann::json::object();
  if (!metadata.is_object()) {
    throw Error(ErrorCode::SchemaViolation, "hypergraph metadata must be an object");
  }
  if (auto it = metadata.find("name"); it != metadata.end() && it->is_string()) {
    if (name.empty()) name = it->get<std::string>();
    metadata.erase(it);
  }
  metadata.erase("hif-version");
  h.name_ = std::move(name);
  h.metadata_ = std::move(metadata);

  for (const auto& [id, _] : h.node_props_) h.node_ids_.push_back(id);
  for (const auto& [id, _] : h.edge_props_) h.edge_ids_.push_back(id);
  h.edge_members_.resize(h.edge_ids_.size());
  h.node_memberships_.resize(h.node_ids_.size());
  for (const auto& inc : h.incidences_) {
    auto e = *h.edge_index(inc.edge);
    auto n = *h.node_index(inc.node);
    h.edge_members_[e].push_back(n);
    h.node_memberships_[n].push_back(e);
  }
  // Incidences are sorted by (edge, node) so members are already ascending.
  for (auto& edges : h.node_memberships_) std::sort(edges.begin(), edges.end());
  return h;
}

const Entity& Hypergraph::node(std::string_view id) const {
  auto it = node_props_.find(id);
  if (it == node_props_.end()) {
    throw Error(ErrorCode::UnknownNode, "unknown node '" + std::string(id) + "'");
  }
  return it->second;
}

const Entity& Hypergraph::edge(std::string_view id) const {
  auto it = edge_props_.find(id);
  if (it == edge_props_.end()) {
    throw Error(ErrorCode::UnknownEdge, "unknown edge '" + std::string(id) + "'");
  }
  return it->second;
}

namespace {

std::optional<std::size_t> find_sorted(const std::vector<std::string>& ids, std::string_view id) {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - ids.begin());
}

}  // namespace

std::optional<std::size_t> Hypergraph::node_index(std::string_view id) const {
  return find_sorted(node_ids_, id);
}

std::optional<std::size_t> Hypergraph::edge_index(std::string_view id) const {
  return find_sorted(edge_ids_, id);
}

std::vector<std::string> Hypergraph::members_of(std::string_view edge_id) const {
  auto e = edge_index(edge_id);
  if (!e) throw Error(ErrorCode::UnknownEdge, "unknown edge '" + std::string(edge_id) + "'");
  std::vector<std::string> out;
  for (auto n : edge_members_[*e]) out.push_back(node_ids_[n]);
  return out;
}

std::vector<std::string> Hypergraph::memberships_of(std::string_view node_id) const {
  auto n = node_index(node_id);
  if (!n) throw Error(ErrorCode::UnknownNode, "unknown node '" + std::string(node_id) + "'");
  std::vector<std::string> out;
  for (auto e : node_memberships_[*n]) out.push_back(edge_ids_[e]);
  return out;
}

Hypergraph dual(const Hypergraph& h) {
  std::vector<IncidenceInput> rows;
  rows.reserve(h.num_incidences());
  for (const auto& inc : h.incidences()) {
    rows.push_back({inc.node, inc.edge, inc.props.weight, inc.props.attrs});
  }
  return Hypergraph::build(std::move(rows), h.edge_props(), h.node_props(), h.name(),
                           h.metadata());
}

IdSet toplexes(const Hypergraph& h) {
  // Sort edges by size descending; a strict superset is always larger.
  std::vector<std::size_t> order(h.num_edges());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return h.members(a).size() > h.members(b).size();
  });

  IdSet out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& inner = h.members(order[i]);
    bool contained = false;
    for (std::size_t j = 0; j < i && !contained; ++j) {
      const auto& outer = h.members(order[j]);
      if (outer.size() <= inner.size()) break;
      contained = std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
    }
    if (!contained) out.insert(h.edges()[order[i]]);
  }
  return out;
}

std::size_t degree(const Hypergraph& h, std::string_view node, std::size_t s) {
  auto n = h.node_index(node);
  if (!n) throw Error(ErrorCode::UnknownNode, "unknown node '" + std::string(node) + "'");
  return static_cast<std::size_t>(std::count_if(
      h.memberships(*n).begin(), h.memberships(*n).end(),
      [&](std::size_t e) { return h.members(e).size() >= s; }));
}

Hypergraph restrict_to(const Hypergraph& h, const std::optional<IdSet>& keep_nodes,
                       const std::optional<IdSet>& keep_edges) {
  if (keep_nodes) {
    for (const auto& id : *keep_nodes) {
      if (!h.has_node(id)) throw Error(ErrorCode::UnknownNode, "unknown node '" + id + "'");
    }
  }
  if (keep_edges) {
    for (const auto& id : *keep_edges) {
      if (!h.has_edge(id)) throw Error(ErrorCode::UnknownEdge, "unknown edge '" + id + "'");
    }
  }
  auto keeps_node = [&](const std::string& id) { return !keep_nodes || keep_nodes->contains(id); };
  auto keeps_edge = [&](const std::string& id) { return !keep_edges || keep_edges->contains(id); };

  std::vector<IncidenceInput> rows;
  IdSet touched;
  for (const auto& inc : h.incidences()) {
    if (keeps_node(inc.node) && keeps_edge(inc.edge)) {
      rows.push_back({inc.edge, inc.node, inc.props.weight, inc.props.attrs});
      touched.insert(inc.node);
    }
  }
  // Without an explicit node set, nodes survive only through a kept edge
  // (or if they were isolated to begin with). Edges never disappear
  // implicitly; emptied ones stay registered.
  EntityTable nodes;
  for (const auto& [id, props] : h.node_props()) {
    const bool survives = keep_nodes ? keep_nodes->contains(id)
                                     : touched.contains(id) || h.memberships_of(id).empty();
    if (survives) nodes.emplace(id, props);
  }
  EntityTable edges;
  for (const auto& [id, props] : h.edge_props()) {
    if (keeps_edge(id)) edges.emplace(id, props);
  }
  return Hypergraph::build(std::move(rows), std::move(nodes), std::move(edges), h.name(),
                           h.metadata());
}

BipartiteGraph bipartite(const Hypergraph& h) {
  BipartiteGraph g;
  g.vertices.reserve(h.num_nodes() + h.num_edges());
  for (const auto& id : h.nodes()) g.vertices.push_back({id, BipartiteGraph::Part::node});
  for (const auto& id : h.edges()) g.vertices.push_back({id, BipartiteGraph::Part::edge});
  const auto offset = h.num_nodes();
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    for (auto n : h.members(e)) g.links.emplace_back(n, offset + e);
  }
  return g;
}

Stats stats(const Hypergraph& h) {
  Stats s;
  s.nodes = h.num_nodes();
  s.edges = h.num_edges();
  s.incidences = h.num_incidences();
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    auto size = h.members(e).size();
    ++s.edge_sizes[size];
    if (size == 0) ++s.empty_edges;
  }
  for (std::size_t n = 0; n < h.num_nodes(); ++n) {
    auto deg = h.memberships(n).size();
    ++s.node_degrees[deg];
    if (deg == 0) ++s.isolated_nodes;
  }
  return s;
}

nlohmann::ordered_json to_json(const Stats& s) {
  auto histogram = [](const std::map<std::size_t, std::size_t>& m) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [k, v] : m) out[std::to_string(k)] = v;
    return out;
  };
  nlohmann::ordered_json j;
  j["nodes"] = s.nodes;
  j["edges"] = s.edges;
  j["incidences"] = s.incidences;
  j["edge_sizes"] = histogram(s.edge_sizes);
  j["node_degrees"] = histogram(s.node_degrees);
  j["isolated_nodes"] = s.isolated_nodes;
  j["empty_edges"] = s.empty_edges;
  return j;
}

}  // namespace hyperbetti
