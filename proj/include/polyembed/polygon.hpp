#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "polyembed/core.hpp"
#include "polyembed/geometry.hpp"

namespace polyembed {

// A validated simple polygon: n >= 3 distinct vertices in counter-clockwise
// order, no three consecutive vertices collinear, no two non-adjacent edges
// sharing any point. Only validate_polygon() produces these.
struct Polygon {
  std::vector<Point> vertices;

  int n() const { return static_cast<int>(vertices.size()); }
  const Point& vertex(int i) const { return vertices[static_cast<size_t>(i)]; }
  // Cyclic successor/predecessor indices.
  int next(int i) const { return (i + 1) % n(); }
  int prev(int i) const { return (i + n() - 1) % n(); }
  Segment edge(int i) const { return {vertex(i), vertex(next(i))}; }
  bool adjacent(int i, int j) const {
    const int d = (i - j + n()) % n();
    return d == 1 || d == n() - 1;
  }
};

// Doubled signed area; positive for counter-clockwise order.
inline __int128 shoelace2(const std::vector<Point>& v) {
  __int128 s = 0;
  const size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % n];
    s += static_cast<__int128>(p.x) * q.y - static_cast<__int128>(q.x) * p.y;
  }
  return s;
}

// Admission gate for every polygon input. Checks run in invariant order and
// report the first failure: vertex count, distinctness, consecutive collinear
// triples, simplicity (all-pairs edge test: non-adjacent edges must not share
// any point), and finally orientation. Clockwise input is reversed when
// normalize_cw is set and rejected otherwise.
inline Result<Polygon> validate_polygon(std::vector<Point> raw,
                                        bool normalize_cw = false) {
  const int n = static_cast<int>(raw.size());
  if (n < 3) {
    return Result<Polygon>::failure(Errc::TooFewVertices,
                                    "need at least 3 vertices, got " +
                                        std::to_string(n));
  }
  for (const Point& p : raw) {
    if (p.x < -kCoordLimit || p.x > kCoordLimit || p.y < -kCoordLimit ||
        p.y > kCoordLimit) {
      return Result<Polygon>::failure(
          Errc::CoordinateOutOfRange,
          "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")");
    }
  }
  {
    std::vector<Point> sorted = raw;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      return Result<Polygon>::failure(
          Errc::DuplicateVertex,
          "(" + std::to_string(dup->x) + ", " + std::to_string(dup->y) + ")");
    }
  }
  for (int i = 0; i < n; ++i) {
    const Point& a = raw[(i + n - 1) % n];
    const Point& b = raw[i];
    const Point& c = raw[(i + 1) % n];
    if (orientation(a, b, c) == Orientation::Collinear) {
      return Result<Polygon>::failure(Errc::CollinearTriple,
                                      "at vertex " + std::to_string(i));
    }
  }
  for (int i = 0; i < n; ++i) {
    // Adjacent edges are safe once collinear triples are excluded: they can
    // only meet at their shared vertex. Test every non-adjacent pair.
    for (int j = i + 1; j < n; ++j) {
      const int i2 = (i + 1) % n;
      const int j2 = (j + 1) % n;
      if (j == i2 || j2 == i) continue;
      if (segments_touch({raw[i], raw[i2]}, {raw[j], raw[j2]})) {
        return Result<Polygon>::failure(Errc::SelfIntersecting,
                                        "edges " + std::to_string(i) + " and " +
                                            std::to_string(j));
      }
    }
  }
  const __int128 area2 = shoelace2(raw);
  if (area2 < 0) {
    if (!normalize_cw) {
      return Result<Polygon>::failure(Errc::NotCounterClockwise,
                                      "signed area is negative");
    }
    std::reverse(raw.begin(), raw.end());
  }
  return Polygon{std::move(raw)};
}

enum class VertexKind { Convex, Reflex };

struct VertexClassification {
  std::vector<VertexKind> kind;
  std::vector<char> is_u_turn;
  // Filled by annotate_isolated() in the visibility layer; false until then.
  std::vector<char> is_isolated;
};

// Vertex i is reflex iff (p_{i-1}, p_i, p_{i+1}) turns clockwise. Collinear
// cannot occur in a validated polygon.
inline VertexClassification classify_vertices(const Polygon& P) {
  const int n = P.n();
  VertexClassification out;
  out.kind.resize(static_cast<size_t>(n));
  out.is_u_turn.assign(static_cast<size_t>(n), 0);
  out.is_isolated.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const Orientation o =
        orientation(P.vertex(P.prev(i)), P.vertex(i), P.vertex(P.next(i)));
    out.kind[static_cast<size_t>(i)] =
        o == Orientation::CW ? VertexKind::Reflex : VertexKind::Convex;
  }
  for (int i = 0; i < n; ++i) {
    if (out.kind[static_cast<size_t>(i)] != VertexKind::Reflex) continue;
    const bool prev_reflex =
        out.kind[static_cast<size_t>(P.prev(i))] == VertexKind::Reflex;
    const bool next_reflex =
        out.kind[static_cast<size_t>(P.next(i))] == VertexKind::Reflex;
    if (prev_reflex || next_reflex) out.is_u_turn[static_cast<size_t>(i)] = 1;
  }
  return out;
}

inline std::vector<int> reflex_vertices(const Polygon& P) {
  const VertexClassification c = classify_vertices(P);
  std::vector<int> out;
  for (int i = 0; i < P.n(); ++i) {
    if (c.kind[static_cast<size_t>(i)] == VertexKind::Reflex) out.push_back(i);
  }
  return out;
}

// Reflex vertices with a reflex polygon-neighbor, in index order.
inline std::vector<int> u_turn_vertices(const Polygon& P) {
  const VertexClassification c = classify_vertices(P);
  std::vector<int> out;
  for (int i = 0; i < P.n(); ++i) {
    if (c.is_u_turn[static_cast<size_t>(i)]) out.push_back(i);
  }
  return out;
}

// Polygon edges (i, next(i)) whose both endpoints are u-turn vertices.
inline std::vector<std::pair<int, int>> u_turn_edges(const Polygon& P) {
  const VertexClassification c = classify_vertices(P);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < P.n(); ++i) {
    const int j = P.next(i);
    if (c.is_u_turn[static_cast<size_t>(i)] &&
        c.is_u_turn[static_cast<size_t>(j)]) {
      out.emplace_back(i, j);
    }
  }
  return out;
}

inline bool is_convex(const Polygon& P) {
  const VertexClassification c = classify_vertices(P);
  return std::none_of(c.kind.begin(), c.kind.end(),
                      [](VertexKind k) { return k == VertexKind::Reflex; });
}

// No two consecutive reflex vertices (equivalently: no u-turn vertex).
inline bool is_pseudo_convex(const Polygon& P) {
  return u_turn_vertices(P).empty();
}

}  // namespace polyembed
