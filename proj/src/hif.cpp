#include "hyperbetti/hif.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <utility>

#include "hyperbetti/numeric.hpp"

namespace hyperbetti {

namespace {

using json = nlohmann::json;

std::string pointer_token(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string child(const std::string& path, std::string_view key) {
  return path + "/" + pointer_token(key);
}

std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

// Walks a parsed document once, recording every violation and, when none
// are found, the inputs for Hypergraph::build. parse_hif and validate_hif
// both go through here so they cannot disagree.
class Reader {
 public:
  std::vector<Diagnostic> diagnostics;

  std::vector<IncidenceInput> incidences;
  EntityTable nodes;
  EntityTable edges;
  json metadata = json::object();

  void read(std::string_view bytes) {
    json doc;
    try {
      doc = json::parse(bytes);
    } catch (const json::parse_error& e) {
      error(ErrorCode::MalformedJson, "", e.what());
      return;
    } catch (const json::exception& e) {
      error(ErrorCode::MalformedJson, "", e.what());
      return;
    }
    if (!doc.is_object()) {
      error(ErrorCode::SchemaViolation, "", "document must be a JSON object");
      return;
    }

    if (auto it = doc.find("network-type"); it != doc.end()) {
      if (!it->is_string() || it->get<std::string>() != "undirected") {
        error(ErrorCode::SchemaViolation, "/network-type",
              "only network-type \"undirected\" is supported");
      }
    }

    if (auto it = doc.find("metadata"); it != doc.end()) {
      if (it->is_object()) {
        metadata = *it;
        if (auto v = metadata.find("hif-version"); v != metadata.end() && *v != hif_version) {
          warning("/metadata/hif-version",
                  "unrecognized hif-version " + v->dump() + "; reading as " +
                      std::string(hif_version));
        }
      } else {
        error(ErrorCode::SchemaViolation, "/metadata", "metadata must be an object");
      }
    }

    for (const auto& [key, value] : doc.items()) {
      if (key == "network-type" || key == "metadata" || key == "incidences" || key == "nodes" ||
          key == "edges") {
        continue;
      }
      if (!metadata.contains(key)) metadata[key] = value;
    }

    read_entities(doc, "nodes", "node", nodes);
    read_entities(doc, "edges", "edge", edges);
    read_incidences(doc);
  }

  bool ok() const { return !has_errors(diagnostics); }

 private:
  void error(ErrorCode code, std::string path, std::string message) {
    diagnostics.push_back({Diagnostic::Severity::error, code, std::move(path), std::move(message)});
  }

  void warning(std::string path, std::string message) {
    diagnostics.push_back({Diagnostic::Severity::warning, ErrorCode::SchemaViolation,
                           std::move(path), std::move(message)});
  }

  std::optional<std::string> read_id(const json& value, const std::string& path) {
    std::string raw;
    if (value.is_string()) {
      raw = value.get<std::string>();
    } else if (value.is_number_integer()) {
      raw = value.dump();
    } else if (value.is_number_float()) {
      raw = format_number(value.get<double>());
    } else {
      error(ErrorCode::SchemaViolation, path, "type error: identifier must be a string or number");
      return std::nullopt;
    }
    try {
      return normalize_id(raw);
    } catch (const Error& e) {
      error(e.code(), path, e.what());
      return std::nullopt;
    }
  }

  std::optional<AttributeValue> read_scalar(const json& value, const std::string& path) {
    switch (value.type()) {
      case json::value_t::null: return AttributeValue(nullptr);
      case json::value_t::boolean: return AttributeValue(value.get<bool>());
      case json::value_t::number_integer:
      case json::value_t::number_unsigned:
      case json::value_t::number_float: {
        double d = value.get<double>();
        if (!std::isfinite(d)) {
          error(ErrorCode::NonFiniteWeight, path, "attribute value is not finite");
          return std::nullopt;
        }
        return AttributeValue(d);
      }
      case json::value_t::string: return AttributeValue(value.get<std::string>());
      default:
        error(ErrorCode::SchemaViolation, path,
              "type error: attribute values must be null, boolean, number or string");
        return std::nullopt;
    }
  }

  // Reads weight, attrs, and any unrecognized keys (which become attrs).
  Entity read_props(const json& obj, const std::string& path,
                    std::initializer_list<std::string_view> id_keys) {
    Entity entity;
    if (auto it = obj.find("weight"); it != obj.end()) {
      auto wpath = child(path, "weight");
      if (!it->is_number()) {
        error(ErrorCode::SchemaViolation, wpath, "type error: weight must be a number");
      } else if (double w = it->get<double>(); !std::isfinite(w)) {
        error(ErrorCode::NonFiniteWeight, wpath, "weight is not finite");
      } else {
        entity.weight = w;
      }
    }
    if (auto it = obj.find("attrs"); it != obj.end()) {
      auto apath = child(path, "attrs");
      if (!it->is_object()) {
        error(ErrorCode::SchemaViolation, apath, "type error: attrs must be an object");
      } else {
        for (const auto& [key, value] : it->items()) {
          if (auto v = read_scalar(value, child(apath, key))) entity.attrs.emplace(key, *v);
        }
      }
    }
    for (const auto& [key, value] : obj.items()) {
      if (key == "weight" || key == "attrs") continue;
      bool is_id = false;
      for (auto id_key : id_keys) is_id = is_id || key == id_key;
      if (is_id || entity.attrs.contains(key)) continue;
      if (auto v = read_scalar(value, child(path, key))) entity.attrs.emplace(key, *v);
    }
    return entity;
  }

  void read_entities(const json& doc, const char* list_key, const char* id_key,
                     EntityTable& out) {
    auto it = doc.find(list_key);
    if (it == doc.end()) return;
    const std::string list_path = child("", list_key);
    if (!it->is_array()) {
      error(ErrorCode::SchemaViolation, list_path, std::string(list_key) + " must be an array");
      return;
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto& item = (*it)[i];
      const auto path = child(list_path, i);
      if (!item.is_object()) {
        error(ErrorCode::SchemaViolation, path, "entry must be an object");
        continue;
      }
      auto id_it = item.find(id_key);
      if (id_it == item.end()) {
        error(ErrorCode::SchemaViolation, path, std::string("missing '") + id_key + "'");
        continue;
      }
      auto id = read_id(*id_it, child(path, id_key));
      auto props = read_props(item, path, {id_key});
      if (!id) continue;
      if (!out.emplace(*id, std::move(props)).second) {
        error(ErrorCode::SchemaViolation, path,
              std::string("duplicate ") + id_key + " '" + *id + "'");
      }
    }
  }

  void read_incidences(const json& doc) {
    auto it = doc.find("incidences");
    if (it == doc.end()) {
      error(ErrorCode::SchemaViolation, "", "missing required key 'incidences'");
      return;
    }
    if (!it->is_array()) {
      error(ErrorCode::SchemaViolation, "/incidences", "incidences must be an array");
      return;
    }
    std::map<std::pair<std::string, std::string>, std::size_t> seen;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto& item = (*it)[i];
      const auto path = child("/incidences", i);
      if (!item.is_object()) {
        error(ErrorCode::SchemaViolation, path, "incidence must be an object");
        continue;
      }
      auto e_it = item.find("edge");
      auto n_it = item.find("node");
      if (e_it == item.end() || n_it == item.end()) {
        error(ErrorCode::SchemaViolation, path,
              e_it == item.end() ? "missing 'edge'" : "missing 'node'");
        continue;
      }
      auto edge = read_id(*e_it, child(path, "edge"));
      auto node = read_id(*n_it, child(path, "node"));
      auto props = read_props(item, path, {"edge", "node"});
      if (!edge || !node) continue;
      auto [pos, fresh] = seen.emplace(std::pair{*edge, *node}, i);
      if (!fresh) {
        error(ErrorCode::DuplicateIncidence, path,
              "duplicate incidence (" + *edge + ", " + *node + "), first at /incidences/" +
                  std::to_string(pos->second));
        continue;
      }
      incidences.push_back({*edge, *node, props.weight, std::move(props.attrs)});
    }
  }
};

struct Outcome {
  std::vector<Diagnostic> diagnostics;
  std::optional<Hypergraph> graph;
};

Outcome read_document(std::string_view bytes) {
  Reader reader;
  reader.read(bytes);
  Outcome out{std::move(reader.diagnostics), std::nullopt};
  if (has_errors(out.diagnostics)) return out;
  try {
    out.graph = Hypergraph::build(std::move(reader.incidences), std::move(reader.nodes),
                                  std::move(reader.edges), {}, std::move(reader.metadata));
  } catch (const Error& e) {
    out.diagnostics.push_back({Diagnostic::Severity::error, e.code(), e.path(), e.what()});
  }
  return out;
}

nlohmann::ordered_json entity_json(const char* id_key, const std::string& id,
                                   const Entity& entity) {
  nlohmann::ordered_json j;
  j[id_key] = id;
  if (entity.weight != 1.0) j["weight"] = entity.weight;
  if (!entity.attrs.empty()) j["attrs"] = to_json(entity.attrs);
  return j;
}

}  // namespace

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) {
    if (d.severity == Diagnostic::Severity::error) return true;
  }
  return false;
}

Hypergraph parse_hif(std::string_view bytes) {
  auto outcome = read_document(bytes);
  for (const auto& d : outcome.diagnostics) {
    if (d.severity == Diagnostic::Severity::error) {
      auto where = d.path.empty() ? std::string("document root") : d.path;
      throw Error(d.code, d.message + " (at " + where + ")", d.path);
    }
  }
  return std::move(*outcome.graph);
}

std::vector<Diagnostic> validate_hif(std::string_view bytes) {
  return read_document(bytes).diagnostics;
}

std::string emit_hif(const Hypergraph& h) {
  nlohmann::ordered_json doc;
  doc["network-type"] = "undirected";

  json meta = h.metadata();
  meta["hif-version"] = hif_version;
  if (!h.name().empty()) meta["name"] = h.name();
  doc["metadata"] = meta;

  auto nodes = nlohmann::ordered_json::array();
  for (const auto& [id, entity] : h.node_props()) nodes.push_back(entity_json("node", id, entity));
  doc["nodes"] = std::move(nodes);

  auto edges = nlohmann::ordered_json::array();
  for (const auto& [id, entity] : h.edge_props()) edges.push_back(entity_json("edge", id, entity));
  doc["edges"] = std::move(edges);

  auto incidences = nlohmann::ordered_json::array();
  for (const auto& inc : h.incidences()) {
    nlohmann::ordered_json j;
    j["edge"] = inc.edge;
    j["node"] = inc.node;
    if (inc.props.weight != 1.0) j["weight"] = inc.props.weight;
    if (!inc.props.attrs.empty()) j["attrs"] = to_json(inc.props.attrs);
    incidences.push_back(std::move(j));
  }
  doc["incidences"] = std::move(incidences);

  return doc.dump(2, ' ', false, json::error_handler_t::replace) + "\n";
}

nlohmann::ordered_json to_json(const Diagnostic& d) {
  nlohmann::ordered_json j;
  j["severity"] = d.severity == Diagnostic::Severity::error ? "error" : "warning";
  j["code"] = to_string(d.code);
  j["path"] = d.path;
  j["message"] = d.message;
  return j;
}

nlohmann::json to_json(const AttributeValue& value) {
  struct Visitor {
    json operator()(std::nullptr_t) const { return nullptr; }
    json operator()(bool b) const { return b; }
    json operator()(double d) const { return d; }
    json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, value);
}

nlohmann::json to_json(const Attributes& attrs) {
  json j = json::object();
  for (const auto& [key, value] : attrs) j[key] = to_json(value);
  return j;
}

}  // namespace hyperbetti
