#include "hyperbetti/layout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperbetti/error.hpp"
#include "hyperbetti/numeric.hpp"

namespace hyperbetti {

void validate(const LayoutParams& p) {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidParams, what); };
  if (p.iterations < 1) fail("iterations must be at least 1");
  if (!(p.width > 0.0) || !(p.height > 0.0) || !std::isfinite(p.width) ||
      !std::isfinite(p.height)) {
    fail("canvas width and height must be positive");
  }
  if (!(p.node_radius > 0.0)) fail("node_radius must be positive");
  if (!(p.hull_padding >= p.node_radius)) fail("hull_padding must be at least node_radius");
  if (2.0 * p.hull_padding >= std::min(p.width, p.height)) {
    fail("hull_padding leaves no room on the canvas");
  }
  if (!(p.initial_step > 0.0) || !std::isfinite(p.initial_step)) {
    fail("initial_step must be positive");
  }
  if (!(p.cooling > 0.0 && p.cooling <= 1.0)) fail("cooling must lie in (0, 1]");
}

namespace {

void rescale(std::vector<Point>& pos, const LayoutParams& p) {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const auto& q : pos) {
    min_x = std::min(min_x, q.x);
    min_y = std::min(min_y, q.y);
    max_x = std::max(max_x, q.x);
    max_y = std::max(max_y, q.y);
  }
  constexpr double eps = 1e-12;
  const double span_x = max_x - min_x;
  const double span_y = max_y - min_y;
  const double room_x = p.width - 2.0 * p.hull_padding;
  const double room_y = p.height - 2.0 * p.hull_padding;
  double scale = 0.0;
  if (span_x > eps && span_y > eps) {
    scale = std::min(room_x / span_x, room_y / span_y);
  } else if (span_x > eps) {
    scale = room_x / span_x;
  } else if (span_y > eps) {
    scale = room_y / span_y;
  }
  const Point mid{(min_x + max_x) / 2.0, (min_y + max_y) / 2.0};
  const Point centre{p.width / 2.0, p.height / 2.0};
  for (auto& q : pos) {
    q = centre + (q - mid) * scale;
    // Clamp away rounding residue at the edges of the room.
    q.x = std::clamp(q.x, p.hull_padding, p.width - p.hull_padding);
    q.y = std::clamp(q.y, p.hull_padding, p.height - p.hull_padding);
    q.x = round_decimals(q.x, 6);
    q.y = round_decimals(q.y, 6);
  }
}

}  // namespace

LayoutDocument force_layout(const Hypergraph& h, const LayoutParams& params,
                            Encodings encodings) {
  validate(params);
  LayoutDocument doc;
  doc.params = params;
  doc.encodings = std::move(encodings);

  const auto graph = bipartite(h);
  const auto n = graph.vertices.size();
  if (n == 0) return doc;

  Lcg rng(params.seed);
  std::vector<Point> pos(n);
  for (auto& q : pos) {
    q.x = rng.uniform() * params.width;
    q.y = rng.uniform() * params.height;
  }

  const double k = std::sqrt(params.width * params.height / static_cast<double>(n));
  const double k3 = k * k * k;
  std::vector<Point> disp(n);
  double step = params.initial_step;

  for (std::size_t iter = 0; iter < params.iterations; ++iter) {
    std::fill(disp.begin(), disp.end(), Point{});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        Point delta = pos[i] - pos[j];
        double d = std::hypot(delta.x, delta.y);
        if (d < 1e-9) {
          // Coincident vertices: separate along an index-derived direction.
          const double angle = static_cast<double>((i * 7 + j * 13) % 360) * 0.017453292519943295;
          delta = {std::cos(angle) * 1e-3, std::sin(angle) * 1e-3};
          d = 1e-3;
        }
        const double force = k3 / (d * d);
        const Point push = delta * (force / d);
        disp[i] = disp[i] + push;
        disp[j] = disp[j] - push;
      }
    }
    for (const auto& [a, b] : graph.links) {
      const Point delta = pos[a] - pos[b];
      // Linear spring: force d along the link, i.e. the full delta.
      disp[a] = disp[a] - delta;
      disp[b] = disp[b] + delta;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double len = std::hypot(disp[i].x, disp[i].y);
      if (len > 0.0) pos[i] = pos[i] + disp[i] * (std::min(len, step) / len);
    }
    step *= params.cooling;
  }

  rescale(pos, params);

  const auto nodes = h.num_nodes();
  for (std::size_t i = 0; i < n; ++i) {
    if (i < nodes) {
      doc.positions.emplace(graph.vertices[i].id, pos[i]);
    } else {
      doc.phantoms.emplace(graph.vertices[i].id, pos[i]);
    }
  }
  doc.hulls = compute_hulls(h, doc.positions, params.node_radius, params.hull_padding);
  return doc;
}

std::map<std::string, Polygon> compute_hulls(const Hypergraph& h,
                                             const std::map<std::string, Point>& positions,
                                             double node_radius, double hull_padding) {
  if (!(node_radius > 0.0) || !(hull_padding >= node_radius)) {
    throw Error(ErrorCode::InvalidParams, "hull_padding must be at least node_radius > 0");
  }
  std::map<std::string, Polygon> hulls;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto& members = h.members(e);
    if (members.empty()) continue;
    std::vector<Point> points;
    points.reserve(members.size());
    for (auto m : members) {
      const auto& id = h.nodes()[m];
      auto it = positions.find(id);
      if (it == positions.end()) {
        throw Error(ErrorCode::MissingPosition,
                    "node '" + id + "' of edge '" + h.edges()[e] + "' has no position");
      }
      points.push_back(it->second);
    }
    hulls.emplace(h.edges()[e], offset_hull(convex_hull(std::move(points)), hull_padding));
  }
  return hulls;
}

nlohmann::ordered_json to_json(const LayoutDocument& doc) {
  auto point = [](Point p) {
    return nlohmann::ordered_json::array({round_decimals(p.x, 6), round_decimals(p.y, 6)});
  };
  nlohmann::ordered_json j;
  auto positions = nlohmann::ordered_json::object();
  for (const auto& [id, p] : doc.positions) positions[id] = point(p);
  j["positions"] = std::move(positions);
  auto phantoms = nlohmann::ordered_json::object();
  for (const auto& [id, p] : doc.phantoms) phantoms[id] = point(p);
  j["phantoms"] = std::move(phantoms);
  j["pinned"] = doc.pinned;
  auto hulls = nlohmann::ordered_json::object();
  for (const auto& [id, polygon] : doc.hulls) {
    auto ring = nlohmann::ordered_json::array();
    for (const auto& p : polygon) ring.push_back(point(p));
    hulls[id] = std::move(ring);
  }
  j["hulls"] = std::move(hulls);
  auto enc = nlohmann::ordered_json::object();
  if (doc.encodings.node_size) enc["node_size"] = *doc.encodings.node_size;
  if (doc.encodings.node_color) enc["node_color"] = *doc.encodings.node_color;
  if (doc.encodings.edge_color) enc["edge_color"] = *doc.encodings.edge_color;
  j["encodings"] = std::move(enc);
  j["seed"] = doc.params.seed;
  const auto& p = doc.params;
  j["params"] = {{"iterations", p.iterations},     {"width", p.width},
                 {"height", p.height},             {"node_radius", p.node_radius},
                 {"hull_padding", p.hull_padding}, {"initial_step", p.initial_step},
                 {"cooling", p.cooling}};
  return j;
}

}  // namespace hyperbetti
