#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <set>

#include "hyperbetti/error.hpp"
#include "hyperbetti/layout.hpp"
#include "hyperbetti/numeric.hpp"

namespace hyperbetti {

namespace {

// Categorical palette (ColorBrewer "Paired"), cycled.
constexpr std::array<const char*, 12> palette = {
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c",
    "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3d9a", "#ffff99", "#b15928",
};
constexpr const char* default_node_color = "#333333";
constexpr const char* missing_color = "#999999";

std::string escape_xml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string num(double v) { return format_number(round_decimals(v, 3)); }

std::string hsl_hex(double hue, double saturation, double lightness) {
  const double c = (1.0 - std::abs(2.0 * lightness - 1.0)) * saturation;
  const double hp = hue / 60.0;
  const double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  if (hp < 1) {
    r = c, g = x;
  } else if (hp < 2) {
    r = x, g = c;
  } else if (hp < 3) {
    g = c, b = x;
  } else if (hp < 4) {
    g = x, b = c;
  } else if (hp < 5) {
    r = x, b = c;
  } else {
    r = c, b = x;
  }
  const double m = lightness - c / 2.0;
  auto channel = [&](double v) { return static_cast<int>(std::lround((v + m) * 255.0)); };
  std::array<char, 8> buf{};
  std::snprintf(buf.data(), buf.size(), "#%02x%02x%02x", channel(r), channel(g), channel(b));
  return buf.data();
}

const AttributeValue* lookup(const EntityTable& table, const std::string& id,
                             const std::string& key) {
  const auto& attrs = table.at(id).attrs;
  auto it = attrs.find(key);
  return it == attrs.end() ? nullptr : &it->second;
}

// Distinct values in sorted text order map to palette slots.
std::map<std::string, std::string> categorical_colors(const EntityTable& table,
                                                      const std::string& key) {
  std::set<std::string> values;
  for (const auto& [id, entity] : table) {
    if (auto it = entity.attrs.find(key); it != entity.attrs.end()) {
      values.insert(to_text(it->second));
    }
  }
  std::map<std::string, std::string> colors;
  std::size_t slot = 0;
  for (const auto& v : values) colors.emplace(v, palette[slot++ % palette.size()]);
  return colors;
}

void check_consistent(const Hypergraph& h, const LayoutDocument& doc) {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::InconsistentDocument, what); };
  if (doc.positions.size() != h.num_nodes()) fail("layout positions do not match the node set");
  for (const auto& id : h.nodes()) {
    if (!doc.positions.contains(id)) fail("node '" + id + "' has no position");
  }
  for (const auto& [id, hull] : doc.hulls) {
    auto e = h.edge_index(id);
    if (!e) fail("hull for unknown edge '" + id + "'");
    if (hull.size() < 3) fail("hull for edge '" + id + "' is degenerate");
  }
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (!h.members(e).empty() && !doc.hulls.contains(h.edges()[e])) {
      fail("edge '" + h.edges()[e] + "' has no hull");
    }
  }
}

}  // namespace

std::string render_svg(const Hypergraph& h, const LayoutDocument& doc, const SvgStyle& style) {
  check_consistent(h, doc);
  const auto& p = doc.params;
  const auto& enc = doc.encodings;

  std::map<std::string, std::string> edge_palette;
  if (enc.edge_color) edge_palette = categorical_colors(h.edge_props(), *enc.edge_color);
  std::map<std::string, std::string> node_palette;
  if (enc.node_color) node_palette = categorical_colors(h.node_props(), *enc.node_color);

  // Linear size scale over the observed numeric range, onto
  // [node_radius / 2, node_radius]. Nodes without a number keep node_radius.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  if (enc.node_size) {
    for (const auto& id : h.nodes()) {
      if (const auto* v = lookup(h.node_props(), id, *enc.node_size)) {
        if (auto d = as_number(*v)) {
          lo = std::min(lo, *d);
          hi = std::max(hi, *d);
        }
      }
    }
  }
  auto radius_of = [&](const std::string& id) {
    if (!enc.node_size) return p.node_radius;
    const auto* v = lookup(h.node_props(), id, *enc.node_size);
    auto d = v ? as_number(*v) : std::nullopt;
    if (!d || !(hi > lo)) return p.node_radius;
    return p.node_radius * (0.5 + 0.5 * (*d - lo) / (hi - lo));
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(p.width) +
         "\" height=\"" + num(p.height) + "\" viewBox=\"0 0 " + num(p.width) + " " +
         num(p.height) + "\">\n";

  out += "  <g class=\"hulls\">\n";
  const auto edge_count = h.num_edges();
  for (std::size_t e = 0; e < edge_count; ++e) {
    const auto& id = h.edges()[e];
    auto it = doc.hulls.find(id);
    if (it == doc.hulls.end()) continue;
    std::string color;
    if (enc.edge_color) {
      const auto* v = lookup(h.edge_props(), id, *enc.edge_color);
      color = v ? edge_palette.at(to_text(*v)) : missing_color;
    } else {
      color = hsl_hex(360.0 * static_cast<double>(e) / static_cast<double>(edge_count), 0.65, 0.5);
    }
    std::string d;
    for (std::size_t i = 0; i < it->second.size(); ++i) {
      const auto& q = it->second[i];
      d += (i == 0 ? "M " : " L ") + num(q.x) + " " + num(q.y);
    }
    d += " Z";
    out += "    <path class=\"hull\" data-edge=\"" + escape_xml(id) + "\" d=\"" + d +
           "\" fill=\"" + color + "\" fill-opacity=\"" + num(style.fill_opacity) +
           "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
  }
  out += "  </g>\n";

  out += "  <g class=\"nodes\">\n";
  for (const auto& id : h.nodes()) {
    const auto& c = doc.positions.at(id);
    std::string color = default_node_color;
    if (enc.node_color) {
      const auto* v = lookup(h.node_props(), id, *enc.node_color);
      color = v ? node_palette.at(to_text(*v)) : missing_color;
    }
    const auto& entity = h.node(id);
    std::string title = escape_xml(id) + "&#10;weight: " + num(entity.weight);
    for (const auto& [key, value] : entity.attrs) {
      title += "&#10;" + escape_xml(key) + ": " + escape_xml(to_text(value));
    }
    out += "    <circle class=\"node\" data-node=\"" + escape_xml(id) + "\" cx=\"" + num(c.x) +
           "\" cy=\"" + num(c.y) + "\" r=\"" + num(radius_of(id)) + "\" fill=\"" + color +
           "\"><title>" + title + "</title></circle>\n";
  }
  out += "  </g>\n";

  if (style.labels) {
    out += "  <g class=\"labels\" font-family=\"sans-serif\" font-size=\"" +
           num(style.font_size) + "\">\n";
    for (const auto& id : h.nodes()) {
      const auto& c = doc.positions.at(id);
      out += "    <text x=\"" + num(c.x + radius_of(id) + 2.0) + "\" y=\"" +
             num(c.y + style.font_size / 3.0) + "\">" + escape_xml(id) + "</text>\n";
    }
    out += "  </g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace hyperbetti
