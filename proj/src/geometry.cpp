#include "hyperbetti/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hyperbetti {

Polygon convex_hull(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;

  Polygon hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    const auto& p = points[i];
    while (k >= lower && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

Polygon offset_hull(const Polygon& hull, double radius, std::size_t min_arc_vertices) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  constexpr double max_step = std::numbers::pi / 16.0;
  Polygon out;
  if (hull.empty()) return out;

  auto emit_arc = [&](Point center, double start, double sweep) {
    auto steps = static_cast<std::size_t>(std::ceil(sweep / max_step));
    steps = std::max(steps, min_arc_vertices);
    const double step = sweep / static_cast<double>(steps);
    // Vertices on the circumscribed circle keep every chord outside the arc.
    const double reach = radius / std::cos(step / 2.0);
    for (std::size_t j = 0; j < steps; ++j) {
      const double angle = start + (static_cast<double>(j) + 0.5) * step;
      out.push_back({center.x + reach * std::cos(angle), center.y + reach * std::sin(angle)});
    }
  };

  if (hull.size() == 1) {
    emit_arc(hull.front(), 0.0, two_pi);
    return out;
  }

  const auto n = hull.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point prev = hull[(i + n - 1) % n];
    const Point here = hull[i];
    const Point next = hull[(i + 1) % n];
    const Point d_in = here - prev;
    const Point d_out = next - here;
    const double start = std::atan2(-d_in.x, d_in.y);  // outward normal of d_in
    double sweep = std::atan2(d_in.x * d_out.y - d_in.y * d_out.x,
                              d_in.x * d_out.x + d_in.y * d_out.y);
    if (sweep <= 0.0) sweep += two_pi;  // segment ends, where cross may be -0
    emit_arc(here, start, sweep);
  }
  return out;
}

double signed_area(const Polygon& polygon) {
  double twice = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const auto& a = polygon[i];
    const auto& b = polygon[(i + 1) % polygon.size()];
    twice += a.x * b.y - a.y * b.x;
  }
  return twice / 2.0;
}

bool is_convex_ccw(const Polygon& polygon, double tolerance) {
  const auto n = polygon.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(polygon[i], polygon[(i + 1) % n], polygon[(i + 2) % n]) < -tolerance) return false;
  }
  return signed_area(polygon) > 0.0;
}

bool contains_strictly(const Polygon& convex, Point p) {
  const auto n = convex.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(convex[i], convex[(i + 1) % n], p) <= 0.0) return false;
  }
  return true;
}

}  // namespace hyperbetti
