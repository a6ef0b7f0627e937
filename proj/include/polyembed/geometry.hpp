#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>

namespace polyembed {

// Exact planar predicates on integer coordinates. Coordinates are capped at
// |c| <= 2^30, so every determinant below fits comfortably in 128 bits and no
// predicate ever approximates.

inline constexpr std::int64_t kCoordLimit = std::int64_t{1} << 30;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  // Lexicographic (x, then y): the sort order used by the point-set chains.
  friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Orientation { CCW, CW, Collinear };

struct Segment {
  Point a;
  Point b;
};

// Signed doubled area of triangle (o, a, b); > 0 iff the triple turns left.
inline __int128 cross(Point o, Point a, Point b) {
  return static_cast<__int128>(a.x - o.x) * (b.y - o.y) -
         static_cast<__int128>(a.y - o.y) * (b.x - o.x);
}

inline Orientation orientation(Point p, Point q, Point r) {
  const __int128 c = cross(p, q, r);
  if (c > 0) return Orientation::CCW;
  if (c < 0) return Orientation::CW;
  return Orientation::Collinear;
}

// p lies on the closed segment s (endpoints inclusive).
inline bool on_segment(Point p, Segment s) {
  if (orientation(s.a, s.b, p) != Orientation::Collinear) return false;
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
         std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

// Open interiors share exactly one point: a strict crossing. Touching at an
// endpoint or running collinearly is not proper.
inline bool proper_intersect(Segment s1, Segment s2) {
  const auto sgn = [](__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
  const int d1 = sgn(cross(s1.a, s1.b, s2.a));
  const int d2 = sgn(cross(s1.a, s1.b, s2.b));
  const int d3 = sgn(cross(s2.a, s2.b, s1.a));
  const int d4 = sgn(cross(s2.a, s2.b, s1.b));
  return d1 * d2 < 0 && d3 * d4 < 0;
}

// Both segments on one line with an intersection of positive length.
inline bool collinear_overlap(Segment s1, Segment s2) {
  if (orientation(s1.a, s1.b, s2.a) != Orientation::Collinear) return false;
  if (orientation(s1.a, s1.b, s2.b) != Orientation::Collinear) return false;
  // Degenerate direction is impossible for the segments the library builds
  // (a != b), so projecting on the dominant axis keeps full information.
  const bool use_x =
      std::max(s1.a.x, s1.b.x) - std::min(s1.a.x, s1.b.x) >=
      std::max(s1.a.y, s1.b.y) - std::min(s1.a.y, s1.b.y);
  const auto coord = [&](Point p) { return use_x ? p.x : p.y; };
  const auto lo1 = std::min(coord(s1.a), coord(s1.b));
  const auto hi1 = std::max(coord(s1.a), coord(s1.b));
  const auto lo2 = std::min(coord(s2.a), coord(s2.b));
  const auto hi2 = std::max(coord(s2.a), coord(s2.b));
  return std::min(hi1, hi2) > std::max(lo1, lo2);
}

// Any shared point at all: proper crossing, endpoint contact, or overlap.
// This is the polygon-simplicity test for non-adjacent edges.
inline bool segments_touch(Segment s1, Segment s2) {
  if (proper_intersect(s1, s2)) return true;
  return on_segment(s2.a, s1) || on_segment(s2.b, s1) ||
         on_segment(s1.a, s2) || on_segment(s1.b, s2);
}

}  // namespace polyembed
