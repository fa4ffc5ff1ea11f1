#pragma once

#include <cstddef>
#include <vector>

namespace hyperbetti {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(Point a, double k) { return {a.x * k, a.y * k}; }
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

using Polygon = std::vector<Point>;

/// z-component of (a - o) x (b - o); positive for a left turn.
inline double cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Andrew's monotone chain. Counterclockwise, collinear points dropped.
/// Fewer than three distinct points come back deduplicated: a single
/// point, or the two extreme points of a segment.
Polygon convex_hull(std::vector<Point> points);

/// Rounded outward offset of a convex hull by `radius`: the hull's
/// Minkowski sum with a disc, with each corner arc replaced by at least
/// `min_arc_vertices` vertices on a circumscribed polygon so that the
/// exact offset region is contained. A point gives a circle, a segment a
/// capsule.
Polygon offset_hull(const Polygon& hull, double radius, std::size_t min_arc_vertices = 8);

double signed_area(const Polygon& polygon);

/// Every consecutive turn is a left turn within `tolerance`.
bool is_convex_ccw(const Polygon& polygon, double tolerance = 1e-9);

/// Strict containment for a convex counterclockwise polygon.
bool contains_strictly(const Polygon& convex, Point p);

}  // namespace hyperbetti
