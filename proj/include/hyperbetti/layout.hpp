#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "hyperbetti/core.hpp"
#include "hyperbetti/geometry.hpp"

namespace hyperbetti {

/// 64-bit linear congruential generator (Knuth's MMIX constants).
class Lcg {
 public:
  static constexpr std::uint64_t multiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t increment = 1442695040888963407ULL;

  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * multiplier + increment;
    return state_;
  }
  /// Uniform in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

struct LayoutParams {
  std::size_t iterations = 300;
  std::uint64_t seed = 0;
  double width = 1000.0;
  double height = 1000.0;
  double node_radius = 8.0;
  double hull_padding = 18.0;
  /// Maximum displacement in the first iteration.
  double initial_step = 100.0;
  /// Per-iteration multiplier applied to the step limit.
  double cooling = 0.98;
};

/// Throws InvalidParams when a field is out of range.
void validate(const LayoutParams& params);

/// Attribute keys bound to visual channels.
struct Encodings {
  std::optional<std::string> node_size;
  std::optional<std::string> node_color;
  std::optional<std::string> edge_color;

  friend bool operator==(const Encodings&, const Encodings&) = default;
};

struct LayoutDocument {
  std::map<std::string, Point> positions;  // node id -> centre
  std::map<std::string, Point> phantoms;   // edge id -> its bipartite vertex
  std::set<std::string> pinned;
  std::map<std::string, Polygon> hulls;    // non-empty edges only
  Encodings encodings;
  LayoutParams params;

  bool empty() const { return positions.empty() && phantoms.empty(); }
};

/// Spring embedder on the bipartite graph: every pair of vertices repels
/// with k^3/d^2, every incidence link pulls with force d, so an isolated
/// link settles at the ideal length k = sqrt(area / vertices). Moves are
/// capped by a step limit that cools geometrically. Starting positions come
/// from Lcg(params.seed); the result is uniformly rescaled into the canvas
/// inset by hull_padding and rounded to 6 decimals.
LayoutDocument force_layout(const Hypergraph& h, const LayoutParams& params,
                            Encodings encodings = {});

/// Rounded convex hull of each non-empty edge's member positions, padded
/// by `hull_padding`. Throws MissingPosition if a member has no position.
std::map<std::string, Polygon> compute_hulls(const Hypergraph& h,
                                             const std::map<std::string, Point>& positions,
                                             double node_radius, double hull_padding);

nlohmann::ordered_json to_json(const LayoutDocument& doc);

struct SvgStyle {
  double fill_opacity = 0.25;
  bool labels = true;
  double font_size = 12.0;
};

/// Standalone SVG 1.1 of the Euler diagram; edge phantoms are not drawn.
/// Throws InconsistentDocument when `doc` does not match `h`.
std::string render_svg(const Hypergraph& h, const LayoutDocument& doc, const SvgStyle& style = {});

}  // namespace hyperbetti
