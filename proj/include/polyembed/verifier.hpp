#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polyembed/embedding.hpp"
#include "polyembed/geometry.hpp"
#include "polyembed/polygon.hpp"
#include "polyembed/visibility.hpp"

namespace polyembed {

// Everything that can be wrong with a claimed embedding. Declaration order is
// also report order: violations sort by kind first, then by detail.
enum class ViolationKind {
  DanglingIndex,        // structure: wrong mapping size, vertex index out of
                        // range, an edge endpoint outside the mapping image,
                        // or a self-loop edge
  NotInjective,         // two graph nodes mapped to the same vertex
  EdgeIsPolygonEdge,    // a graph edge coincides with a polygon edge
  ChordLeavesPolygon,   // a graph edge exits the polygon
  ChordThroughVertex,   // a graph edge passes through a non-endpoint vertex
  ChordOverlapsBoundary,  // a graph edge runs along a stretch of boundary
  GraphEdgeCrossing,    // two graph edges properly cross (planar mode)
  GraphEdgeOverlap,     // two graph edges collinearly overlap (planar mode)
  WrongDegreeSequence,  // edge count or a vertex degree does not fit the kind
  NotSingleCycle,       // degrees fit a cycle but the edges split into several
  NotSinglePath,        // degrees fit a path but the edges are disconnected
  NotClique,            // a required pair is missing or an edge is duplicated
};

inline const char* violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::DanglingIndex: return "DanglingIndex";
    case ViolationKind::NotInjective: return "NotInjective";
    case ViolationKind::EdgeIsPolygonEdge: return "EdgeIsPolygonEdge";
    case ViolationKind::ChordLeavesPolygon: return "ChordLeavesPolygon";
    case ViolationKind::ChordThroughVertex: return "ChordThroughVertex";
    case ViolationKind::ChordOverlapsBoundary: return "ChordOverlapsBoundary";
    case ViolationKind::GraphEdgeCrossing: return "GraphEdgeCrossing";
    case ViolationKind::GraphEdgeOverlap: return "GraphEdgeOverlap";
    case ViolationKind::WrongDegreeSequence: return "WrongDegreeSequence";
    case ViolationKind::NotSingleCycle: return "NotSingleCycle";
    case ViolationKind::NotSinglePath: return "NotSinglePath";
    case ViolationKind::NotClique: return "NotClique";
  }
  return "?";
}

// detail pins the concrete indices that reproduce the failure:
//   DanglingIndex        [actual_size, expected_size] | [node, vertex] |
//                        [a, b] (edge outside image or self-loop)
//   NotInjective         [vertex, node_a, node_b]
//   EdgeIsPolygonEdge / Chord*  [a, b] (the edge, min first)
//   GraphEdgeCrossing/Overlap   [a1, b1, a2, b2] (both edges)
//   WrongDegreeSequence  [actual_edges, expected_edges] | [vertex, degree]
//   NotSingleCycle/Path  vertices unreachable from the canonical start
//   NotClique            [a, b] (missing or duplicated pair)
struct Violation {
  ViolationKind kind;
  std::vector<std::int64_t> detail;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend bool operator<(const Violation& x, const Violation& y) {
    if (x.kind != y.kind) {
      return static_cast<int>(x.kind) < static_cast<int>(y.kind);
    }
    return x.detail < y.detail;
  }
};

namespace detail {

inline void sort_violations(std::vector<Violation>& v) {
  std::sort(v.begin(), v.end());
}

// Structure gate shared by the polygon and point-set verifiers: mapping size,
// index ranges, injectivity, edge endpoints inside the mapping image, no
// self-loops. Returns true when the later geometric stages are meaningful.
inline bool check_structure(int vertex_count, const GraphSpec& spec,
                            const std::vector<int>& mapping,
                            const std::vector<std::pair<int, int>>& edges,
                            std::vector<Violation>& out) {
  const int expected = spec.nodes();
  if (static_cast<int>(mapping.size()) != expected) {
    out.push_back({ViolationKind::DanglingIndex,
                   {static_cast<std::int64_t>(mapping.size()), expected}});
    return false;
  }
  bool sound = true;
  for (size_t node = 0; node < mapping.size(); ++node) {
    const int v = mapping[node];
    if (v < 0 || v >= vertex_count) {
      out.push_back({ViolationKind::DanglingIndex,
                     {static_cast<std::int64_t>(node), v}});
      sound = false;
    }
  }
  if (!sound) return false;

  std::set<int> image(mapping.begin(), mapping.end());
  for (const auto& [a, b] : edges) {
    if (a == b || !image.count(a) || !image.count(b)) {
      out.push_back({ViolationKind::DanglingIndex, {a, b}});
      sound = false;
    }
  }
  if (!sound) return false;

  // Injectivity: report every vertex hit by more than one node.
  std::vector<std::pair<int, int>> by_vertex;  // (vertex, node)
  for (size_t node = 0; node < mapping.size(); ++node) {
    by_vertex.emplace_back(mapping[node], static_cast<int>(node));
  }
  std::sort(by_vertex.begin(), by_vertex.end());
  for (size_t i = 1; i < by_vertex.size(); ++i) {
    if (by_vertex[i].first == by_vertex[i - 1].first) {
      out.push_back({ViolationKind::NotInjective,
                     {by_vertex[i].first, by_vertex[i - 1].second,
                      by_vertex[i].second}});
      sound = false;
    }
  }
  return sound;
}

// Planar stage: no two graph edges may properly cross; edges sharing an
// endpoint (or not) may never collinearly overlap.
inline void check_planarity(const std::vector<Point>& coords,
                            const std::vector<std::pair<int, int>>& edges,
                            std::vector<Violation>& out) {
  for (size_t i = 0; i < edges.size(); ++i) {
    for (size_t j = i + 1; j < edges.size(); ++j) {
      const auto& [a1, b1] = edges[i];
      const auto& [a2, b2] = edges[j];
      const Segment s1{coords[static_cast<size_t>(a1)],
                       coords[static_cast<size_t>(b1)]};
      const Segment s2{coords[static_cast<size_t>(a2)],
                       coords[static_cast<size_t>(b2)]};
      const bool shared = a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2;
      if (!shared && proper_intersect(s1, s2)) {
        out.push_back({ViolationKind::GraphEdgeCrossing, {a1, b1, a2, b2}});
      }
      if (collinear_overlap(s1, s2)) {
        out.push_back({ViolationKind::GraphEdgeOverlap, {a1, b1, a2, b2}});
      }
    }
  }
}

// Shape stage: does the drawn edge multiset realize the graph kind? Stages
// gate each other (count, then degrees, then connectivity) so one root cause
// yields one family of reports. Cliques skip straight to the exact pair-set
// comparison, which names each missing or duplicated pair.
inline void check_shape(const GraphSpec& spec, const std::vector<int>& mapping,
                        const std::vector<std::pair<int, int>>& edges,
                        std::vector<Violation>& out) {
  std::vector<int> verts = mapping;
  std::sort(verts.begin(), verts.end());

  if (spec.kind == GraphKind::Clique) {
    std::vector<std::pair<int, int>> got = edges;
    canonicalize_edges(got);
    std::vector<std::pair<int, int>> want;
    for (size_t i = 0; i < verts.size(); ++i) {
      for (size_t j = i + 1; j < verts.size(); ++j) {
        want.emplace_back(verts[i], verts[j]);
      }
    }
    for (const auto& e : want) {
      if (!std::binary_search(got.begin(), got.end(), e)) {
        out.push_back({ViolationKind::NotClique, {e.first, e.second}});
      }
    }
    for (size_t i = 1; i < got.size(); ++i) {
      if (got[i] == got[i - 1]) {
        out.push_back({ViolationKind::NotClique, {got[i].first, got[i].second}});
      }
    }
    return;
  }

  const int expected_edges = spec.size;
  if (static_cast<int>(edges.size()) != expected_edges) {
    out.push_back({ViolationKind::WrongDegreeSequence,
                   {static_cast<std::int64_t>(edges.size()), expected_edges}});
    return;
  }
  std::vector<std::pair<int, int>> degree;  // (vertex, degree), verts sorted
  for (int v : verts) degree.emplace_back(v, 0);
  const auto bump = [&](int v) {
    auto it = std::lower_bound(degree.begin(), degree.end(),
                               std::make_pair(v, 0));
    ++it->second;
  };
  for (const auto& [a, b] : edges) {
    bump(a);
    bump(b);
  }
  bool degrees_ok = true;
  for (const auto& [v, d] : degree) {
    const bool fits =
        spec.kind == GraphKind::Cycle ? d == 2 : (d == 1 || d == 2);
    if (!fits) {
      out.push_back({ViolationKind::WrongDegreeSequence, {v, d}});
      degrees_ok = false;
    }
  }
  if (!degrees_ok) return;

  // With the edge count and degrees right, a path automatically has exactly
  // two endpoints; all that can still fail is connectivity.
  int start = verts.front();
  if (spec.kind == GraphKind::Path) {
    for (const auto& [v, d] : degree) {
      if (d == 1) {
        start = v;
        break;
      }
    }
  }
  std::set<int> seen{start};
  std::vector<int> frontier{start};
  while (!frontier.empty()) {
    const int v = frontier.back();
    frontier.pop_back();
    for (const auto& [a, b] : edges) {
      const int other = a == v ? b : (b == v ? a : -1);
      if (other >= 0 && seen.insert(other).second) frontier.push_back(other);
    }
  }
  if (seen.size() != verts.size()) {
    Violation viol{spec.kind == GraphKind::Cycle
                       ? ViolationKind::NotSingleCycle
                       : ViolationKind::NotSinglePath,
                   {}};
    for (int v : verts) {
      if (!seen.count(v)) viol.detail.push_back(v);
    }
    out.push_back(std::move(viol));
  }
}

}  // namespace detail

// The single source of truth for embedding validity. Returns every violation
// found (empty list = OK), in canonical order. Stages: structure and
// injectivity gate everything; then each drawn edge must be an interior
// chord; then (planar mode) no two edges may cross or overlap; then the edge
// multiset must realize the graph kind.
inline std::vector<Violation> verify_embedding(const Polygon& P,
                                               const Embedding& E,
                                               const GraphSpec& spec,
                                               bool planar) {
  std::vector<Violation> out;
  std::vector<std::pair<int, int>> edges = E.edges;
  canonicalize_edges(edges);
  if (!detail::check_structure(P.n(), spec, E.mapping, edges, out)) {
    detail::sort_violations(out);
    return out;
  }
  for (const auto& [a, b] : edges) {
    const auto st = chord_status(P, a, b);
    switch (st.value()) {
      case ChordStatus::Ok: break;
      case ChordStatus::PolygonEdge:
        out.push_back({ViolationKind::EdgeIsPolygonEdge, {a, b}});
        break;
      case ChordStatus::LeavesPolygon:
        out.push_back({ViolationKind::ChordLeavesPolygon, {a, b}});
        break;
      case ChordStatus::ThroughVertex:
        out.push_back({ViolationKind::ChordThroughVertex, {a, b}});
        break;
      case ChordStatus::OverlapsBoundary:
        out.push_back({ViolationKind::ChordOverlapsBoundary, {a, b}});
        break;
    }
  }
  if (planar) {
    detail::check_planarity(P.vertices, edges, out);
  }
  detail::check_shape(spec, E.mapping, edges, out);
  detail::sort_violations(out);
  return out;
}

inline bool embedding_ok(const Polygon& P, const Embedding& E,
                         const GraphSpec& spec, bool planar) {
  return verify_embedding(P, E, spec, planar).empty();
}

/// Point-set variant: nodes sit on bare points, there is no boundary, so the
// chord stages reduce to one rule — an edge may not pass through any other
// mapped point (reported as ChordThroughVertex with detail [a, b, point]).
inline std::vector<Violation> verify_pointset_embedding(
    const std::vector<Point>& points, const Embedding& E,
    const GraphSpec& spec, bool planar) {
  std::vector<Violation> out;
  std::vector<std::pair<int, int>> edges = E.edges;
  canonicalize_edges(edges);
  if (!detail::check_structure(static_cast<int>(points.size()), spec,
                               E.mapping, edges, out)) {
    detail::sort_violations(out);
    return out;
  }
  for (const auto& [a, b] : edges) {
    const Segment s{points[static_cast<size_t>(a)],
                    points[static_cast<size_t>(b)]};
    for (int p : E.mapping) {
      if (p == a || p == b) continue;
      if (on_segment(points[static_cast<size_t>(p)], s)) {
        out.push_back({ViolationKind::ChordThroughVertex, {a, b, p}});
      }
    }
  }
  if (planar) {
    detail::check_planarity(points, edges, out);
  }
  detail::check_shape(spec, E.mapping, edges, out);
  detail::sort_violations(out);
  return out;
}

}  // namespace polyembed
