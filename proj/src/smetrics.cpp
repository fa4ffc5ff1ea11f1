#include "hyperbetti/smetrics.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "hyperbetti/error.hpp"
#include "hyperbetti/numeric.hpp"

namespace hyperbetti {

std::string_view to_string(Side side) { return side == Side::edges ? "edges" : "nodes"; }

std::optional<Side> parse_side(std::string_view text) {
  if (text == "edges") return Side::edges;
  if (text == "nodes") return Side::nodes;
  return std::nullopt;
}

std::optional<std::size_t> SLineGraph::index_of(std::string_view id) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), id);
  if (it == vertices.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

namespace {

using MemberFn = std::function<const std::vector<std::size_t>&(std::size_t)>;

// `groups(i)` lists the members of candidate i, `inverse(m)` the candidates
// containing member m. The same routine serves both sides.
SLineGraph build_line_graph(std::size_t s, Side side, const std::vector<std::string>& ids,
                            const MemberFn& groups, const MemberFn& inverse) {
  SLineGraph g;
  g.s = s;
  g.side = side;

  constexpr auto absent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> vertex_of(ids.size(), absent);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (groups(i).size() >= s) {
      vertex_of[i] = g.vertices.size();
      g.vertices.push_back(ids[i]);
    }
  }
  g.neighbors.resize(g.vertices.size());

  std::vector<std::size_t> overlap(ids.size(), 0);
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (vertex_of[i] == absent) continue;
    touched.clear();
    for (auto m : groups(i)) {
      for (auto j : inverse(m)) {
        if (j <= i || vertex_of[j] == absent) continue;
        if (overlap[j]++ == 0) touched.push_back(j);
      }
    }
    std::sort(touched.begin(), touched.end());
    for (auto j : touched) {
      if (overlap[j] >= s) {
        g.links.push_back({vertex_of[i], vertex_of[j], overlap[j]});
        g.neighbors[vertex_of[i]].push_back(vertex_of[j]);
        g.neighbors[vertex_of[j]].push_back(vertex_of[i]);
      }
      overlap[j] = 0;
    }
  }
  for (auto& adj : g.neighbors) std::sort(adj.begin(), adj.end());
  return g;
}

void check_s(std::size_t s) {
  if (s < 1) throw Error(ErrorCode::InvalidS, "s must be a positive integer");
}

std::size_t require_vertex(const SLineGraph& g, std::string_view id) {
  auto idx = g.index_of(id);
  if (!idx) {
    throw Error(ErrorCode::UnknownVertex,
                "'" + std::string(id) + "' is not a vertex of the " + std::to_string(g.s) +
                    "-line graph on " + std::string(to_string(g.side)));
  }
  return *idx;
}

Centrality label(const SLineGraph& g, const std::vector<double>& values) {
  Centrality out;
  for (std::size_t i = 0; i < g.size(); ++i) out.emplace(g.vertices[i], values[i]);
  return out;
}

}  // namespace

SLineGraph s_line_graph(const Hypergraph& h, std::size_t s, Side side) {
  check_s(s);
  if (side == Side::edges) {
    return build_line_graph(
        s, side, h.edges(),
        [&](std::size_t e) -> const std::vector<std::size_t>& { return h.members(e); },
        [&](std::size_t n) -> const std::vector<std::size_t>& { return h.memberships(n); });
  }
  return build_line_graph(
      s, side, h.nodes(),
      [&](std::size_t n) -> const std::vector<std::size_t>& { return h.memberships(n); },
      [&](std::size_t e) -> const std::vector<std::size_t>& { return h.members(e); });
}

std::vector<std::size_t> bfs_distances(const SLineGraph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.size(), unreachable);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto v : g.neighbors[u]) {
      if (dist[v] == unreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<std::vector<std::size_t>> components(const SLineGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t root = 0; root < g.size(); ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> comp{root};
    seen[root] = true;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (auto v : g.neighbors[comp[k]]) {
        if (!seen[v]) {
          seen[v] = true;
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::size_t> eccentricities(const SLineGraph& g) {
  std::vector<std::size_t> ecc(g.size(), 0);
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (auto d : bfs_distances(g, u)) {
      if (d != unreachable) ecc[u] = std::max(ecc[u], d);
    }
  }
  return ecc;
}

std::optional<std::size_t> diameter(const SLineGraph& g) {
  if (g.size() == 0) return std::nullopt;
  auto comps = components(g);
  const std::vector<std::size_t>* largest = &comps.front();
  for (const auto& c : comps) {
    if (c.size() > largest->size()) largest = &c;
  }
  auto ecc = eccentricities(g);
  std::size_t best = 0;
  for (auto v : *largest) best = std::max(best, ecc[v]);
  return best;
}

std::vector<double> betweenness(const SLineGraph& g, bool normalized) {
  // Brandes' pair-dependency accumulation; every pair is counted from both
  // ends, hence the final halving.
  const auto n = g.size();
  std::vector<double> score(n, 0.0);
  std::vector<std::size_t> order;
  std::vector<std::size_t> dist(n);
  std::vector<double> paths(n);
  std::vector<double> delta(n);
  for (std::size_t source = 0; source < n; ++source) {
    std::fill(dist.begin(), dist.end(), unreachable);
    std::fill(paths.begin(), paths.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();

    dist[source] = 0;
    paths[source] = 1.0;
    std::deque<std::size_t> queue{source};
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (auto v : g.neighbors[u]) {
        if (dist[v] == unreachable) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
        if (dist[v] == dist[u] + 1) paths[v] += paths[u];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto w = *it;
      for (auto v : g.neighbors[w]) {
        if (dist[v] != unreachable && dist[v] + 1 == dist[w]) {
          delta[v] += paths[v] / paths[w] * (1.0 + delta[w]);
        }
      }
      if (w != source) score[w] += delta[w];
    }
  }
  for (auto& x : score) x /= 2.0;
  if (normalized && n > 2) {
    const double pairs = static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
    for (auto& x : score) x /= pairs;
  }
  return score;
}

std::vector<double> closeness(const SLineGraph& g, bool normalized) {
  const auto n = g.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    std::size_t reached = 0;
    std::size_t total = 0;
    for (auto d : bfs_distances(g, u)) {
      if (d != unreachable && d > 0) {
        ++reached;
        total += d;
      }
    }
    if (total == 0) continue;
    out[u] = static_cast<double>(reached) / static_cast<double>(total);
    if (normalized) out[u] *= static_cast<double>(reached) / static_cast<double>(n - 1);
  }
  return out;
}

std::vector<double> harmonic(const SLineGraph& g, bool normalized) {
  const auto n = g.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    for (auto d : bfs_distances(g, u)) {
      if (d != unreachable && d > 0) out[u] += 1.0 / static_cast<double>(d);
    }
    if (normalized && n > 1) out[u] /= static_cast<double>(n - 1);
  }
  return out;
}

Components s_connected_components(const Hypergraph& h, std::size_t s, Side side) {
  auto g = s_line_graph(h, s, side);
  Components out;
  for (const auto& comp : components(g)) {
    auto& ids = out.emplace_back();
    for (auto v : comp) ids.push_back(g.vertices[v]);
  }
  return out;
}

std::optional<std::size_t> s_distance(const Hypergraph& h, std::size_t s, Side side,
                                      std::string_view from, std::string_view to) {
  auto g = s_line_graph(h, s, side);
  auto u = require_vertex(g, from);
  auto v = require_vertex(g, to);
  auto d = bfs_distances(g, u)[v];
  if (d == unreachable) return std::nullopt;
  return d;
}

std::size_t s_eccentricity(const Hypergraph& h, std::size_t s, Side side, std::string_view u) {
  auto g = s_line_graph(h, s, side);
  auto src = require_vertex(g, u);
  std::size_t ecc = 0;
  for (auto d : bfs_distances(g, src)) {
    if (d != unreachable) ecc = std::max(ecc, d);
  }
  return ecc;
}

std::map<std::string, std::size_t> s_eccentricities(const Hypergraph& h, std::size_t s,
                                                    Side side) {
  auto g = s_line_graph(h, s, side);
  auto ecc = eccentricities(g);
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < g.size(); ++i) out.emplace(g.vertices[i], ecc[i]);
  return out;
}

std::optional<std::size_t> s_diameter(const Hypergraph& h, std::size_t s, Side side) {
  return diameter(s_line_graph(h, s, side));
}

Centrality s_betweenness(const Hypergraph& h, std::size_t s, Side side, bool normalized) {
  auto g = s_line_graph(h, s, side);
  return label(g, betweenness(g, normalized));
}

Centrality s_closeness(const Hypergraph& h, std::size_t s, Side side, bool normalized) {
  auto g = s_line_graph(h, s, side);
  return label(g, closeness(g, normalized));
}

Centrality s_harmonic(const Hypergraph& h, std::size_t s, Side side, bool normalized) {
  auto g = s_line_graph(h, s, side);
  return label(g, harmonic(g, normalized));
}

nlohmann::ordered_json to_json(const SLineGraph& g) {
  nlohmann::ordered_json j;
  j["s"] = g.s;
  j["side"] = to_string(g.side);
  j["vertices"] = g.vertices;
  auto links = nlohmann::ordered_json::array();
  for (const auto& l : g.links) {
    links.push_back({g.vertices[l.u], g.vertices[l.v], l.intersection_size});
  }
  j["links"] = std::move(links);
  return j;
}

nlohmann::ordered_json components_to_json(const Components& c) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& comp : c) j.push_back(comp);
  return j;
}

nlohmann::ordered_json centrality_to_json(const Centrality& c) {
  auto j = nlohmann::ordered_json::object();
  for (const auto& [id, value] : c) j[id] = round_significant(value, 12);
  return j;
}

}  // namespace hyperbetti
