#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polyembed/core.hpp"
#include "polyembed/geometry.hpp"
#include "polyembed/polygon.hpp"

namespace polyembed {

// Why a vertex pair fails to be an interior chord, or Ok. Checks run in this
// order and the first hit wins, so every pair gets one stable answer.
enum class ChordStatus {
  Ok,
  PolygonEdge,
  OverlapsBoundary,
  ThroughVertex,
  LeavesPolygon,
};

inline const char* chord_status_name(ChordStatus s) {
  switch (s) {
    case ChordStatus::Ok: return "Ok";
    case ChordStatus::PolygonEdge: return "PolygonEdge";
    case ChordStatus::OverlapsBoundary: return "OverlapsBoundary";
    case ChordStatus::ThroughVertex: return "ThroughVertex";
    case ChordStatus::LeavesPolygon: return "LeavesPolygon";
  }
  return "?";
}

namespace detail {

// Does the segment from vertex a toward point b start into the polygon's
// interior wedge at a? Tested against a's two incident boundary edges; the
// reflex case excludes only the exterior wedge.
inline bool in_cone(const Polygon& P, int a, const Point& b) {
  const Point& pa = P.vertex(a);
  const Point& a0 = P.vertex(P.prev(a));
  const Point& a1 = P.vertex(P.next(a));
  const auto left = [](const Point& x, const Point& y, const Point& z) {
    return cross(x, y, z) > 0;
  };
  const auto left_on = [](const Point& x, const Point& y, const Point& z) {
    return cross(x, y, z) >= 0;
  };
  if (left_on(pa, a1, a0)) {
    // Convex corner at a.
    return left(pa, b, a0) && left(b, pa, a1);
  }
  // Reflex corner at a.
  return !(left_on(pa, b, a1) && left_on(b, pa, a0));
}

}  // namespace detail

// Classifies the open segment between vertices i and j of a validated
// polygon. Ok means the segment lies strictly inside the polygon except for
// its endpoints — an interior chord in the strict sense: it may not pass
// through any other vertex, run along any stretch of boundary, or exit the
// polygon even momentarily. Degenerate contact is always disqualifying.
inline Result<ChordStatus> chord_status(const Polygon& P, int i, int j) {
  const int n = P.n();
  if (i < 0 || i >= n || j < 0 || j >= n || i == j) {
    return Result<ChordStatus>::failure(
        Errc::IndexOutOfRange,
        "chord (" + std::to_string(i) + ", " + std::to_string(j) + ") on " +
            std::to_string(n) + "-gon");
  }
  if (P.adjacent(i, j)) return ChordStatus::PolygonEdge;

  const Point& a = P.vertex(i);
  const Point& b = P.vertex(j);
  const Segment chord{a, b};

  for (int e = 0; e < n; ++e) {
    if (collinear_overlap(chord, P.edge(e))) {
      return ChordStatus::OverlapsBoundary;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (v == i || v == j) continue;
    if (on_segment(P.vertex(v), chord)) return ChordStatus::ThroughVertex;
  }
  for (int e = 0; e < n; ++e) {
    if (proper_intersect(chord, P.edge(e))) return ChordStatus::LeavesPolygon;
  }
  // No boundary contact beyond the endpoints: the segment is either entirely
  // inside or entirely outside. The wedge test at an endpoint settles which.
  if (!detail::in_cone(P, i, b) || !detail::in_cone(P, j, a)) {
    return ChordStatus::LeavesPolygon;
  }
  return ChordStatus::Ok;
}

// True iff i, j are non-adjacent and the open segment between them lies
// strictly inside the polygon. Out-of-range or equal indices are simply not
// chords here; callers needing the error use chord_status directly.
inline bool is_interior_chord(const Polygon& P, int i, int j) {
  const auto r = chord_status(P, i, j);
  return r.ok() && r.value() == ChordStatus::Ok;
}

// S_i: vertex i itself, its two polygon neighbors, and every vertex joined
// to i by an interior chord. Ascending index order.
inline std::vector<int> visible_set(const Polygon& P, int i) {
  const int n = P.n();
  std::vector<char> in(static_cast<size_t>(n), 0);
  in[static_cast<size_t>(i)] = 1;
  in[static_cast<size_t>(P.prev(i))] = 1;
  in[static_cast<size_t>(P.next(i))] = 1;
  for (int j = 0; j < n; ++j) {
    if (is_interior_chord(P, i, j)) in[static_cast<size_t>(j)] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (in[static_cast<size_t>(v)]) out.push_back(v);
  }
  return out;
}

// Symmetric visibility relation: self and polygon neighbors always related,
// plus every interior-chord pair.
struct VisibilityGraph {
  int n = 0;
  std::vector<char> adj;  // n*n row-major

  bool adjacent(int i, int j) const {
    return adj[static_cast<size_t>(i) * static_cast<size_t>(n) +
               static_cast<size_t>(j)] != 0;
  }
  std::vector<int> set_of(int i) const {
    std::vector<int> out;
    for (int j = 0; j < n; ++j) {
      if (adjacent(i, j)) out.push_back(j);
    }
    return out;
  }
};

inline VisibilityGraph visibility_graph(const Polygon& P) {
  const int n = P.n();
  VisibilityGraph g;
  g.n = n;
  g.adj.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  const auto mark = [&](int i, int j) {
    g.adj[static_cast<size_t>(i) * static_cast<size_t>(n) +
          static_cast<size_t>(j)] = 1;
    g.adj[static_cast<size_t>(j) * static_cast<size_t>(n) +
          static_cast<size_t>(i)] = 1;
  };
  for (int i = 0; i < n; ++i) {
    mark(i, i);
    mark(i, P.next(i));
    for (int j = i + 1; j < n; ++j) {
      if (is_interior_chord(P, i, j)) mark(i, j);
    }
  }
  return g;
}

// All interior chords as ordered pairs i < j, lexicographic.
inline std::vector<std::pair<int, int>> all_chords(const Polygon& P) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < P.n(); ++i) {
    for (int j = i + 1; j < P.n(); ++j) {
      if (is_interior_chord(P, i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

struct IsolatedDetail {
  std::vector<int> isolated;  // all isolated vertices, ascending
  std::vector<int> card_lt5;  // |S_i| < 5
  std::vector<int> card5_adjacent_pair;  // |S_i| == 5 and the two vertices
                                         // beyond {i-1,i,i+1} are polygon-
                                         // adjacent to each other
};

// A vertex is isolated when its visible set is too small to ever carry two
// independent incident chords: either |S_i| < 5 outright, or |S_i| == 5 but
// the only two vertices beyond {i-1, i, i+1} sit next to each other on the
// boundary. The second condition's reading ("adjacent" = to each other) is
// surfaced in the analyze output so downstream users see the rule applied.
inline IsolatedDetail isolated_vertices_detailed(const Polygon& P) {
  IsolatedDetail out;
  const int n = P.n();
  for (int i = 0; i < n; ++i) {
    std::vector<int> extra;  // chord partners; never polygon-adjacent to i
    for (int j = 0; j < n; ++j) {
      if (is_interior_chord(P, i, j)) extra.push_back(j);
    }
    const int card = 3 + static_cast<int>(extra.size());
    if (card < 5) {
      out.isolated.push_back(i);
      out.card_lt5.push_back(i);
    } else if (card == 5 && P.adjacent(extra[0], extra[1])) {
      out.isolated.push_back(i);
      out.card5_adjacent_pair.push_back(i);
    }
  }
  return out;
}

inline std::vector<int> isolated_vertices(const Polygon& P) {
  return isolated_vertices_detailed(P).isolated;
}

// Human-readable statement of the isolated-vertex rule as implemented,
// emitted verbatim by the CLI analyze command.
inline const char* isolated_rule_text() {
  return "isolated: |S_i| < 5, or |S_i| == 5 with the two visible vertices "
         "beyond {i-1,i,i+1} adjacent to each other";
}

// classify_vertices() augmented with the isolated flags.
inline VertexClassification classify_with_isolation(const Polygon& P) {
  VertexClassification c = classify_vertices(P);
  for (int i : isolated_vertices(P)) c.is_isolated[static_cast<size_t>(i)] = 1;
  return c;
}

}  // namespace polyembed
