#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "polyembed/core.hpp"
#include "polyembed/embedding.hpp"
#include "polyembed/geometry.hpp"
#include "polyembed/verifier.hpp"

namespace polyembed {

namespace detail {

// Indices of pts in lexicographic (x, then y) order.
inline std::vector<int> lex_order(const std::vector<Point>& pts) {
  std::vector<int> order(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return pts[static_cast<size_t>(a)] < pts[static_cast<size_t>(b)];
  });
  return order;
}

inline Result<Embedding> reject_duplicates(const std::vector<Point>& pts,
                                           const std::vector<int>& order) {
  for (size_t i = 1; i < order.size(); ++i) {
    const Point& p = pts[static_cast<size_t>(order[i])];
    if (p == pts[static_cast<size_t>(order[i - 1])]) {
      return Result<Embedding>::failure(
          Errc::DuplicatePoint,
          "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")");
    }
  }
  return Embedding{};
}

// A drawn-cycle edge pair is unusable when the segments properly cross,
// collinearly overlap, or one's endpoint lies strictly inside the other.
// Edges sharing an endpoint are consecutive cycle edges here and are safe:
// both constructions emit strictly lex-monotone chains, which cannot double
// back onto themselves.
inline bool bad_edge_pair(const Point& a, const Point& b, const Point& c,
                          const Point& d) {
  if (a == c || a == d || b == c || b == d) return false;
  const Segment s1{a, b};
  const Segment s2{c, d};
  if (proper_intersect(s1, s2) || collinear_overlap(s1, s2)) return true;
  return on_segment(c, s1) || on_segment(d, s1) || on_segment(a, s2) ||
         on_segment(b, s2);
}

// Pair-based cycle attempt: consecutive lex pairs split into a lower point
// (smaller (y, x)) and an upper point, chained separately and closed at both
// ends. Odd leftovers extend one chain. Returns the cycle as point indices
// in cycle order plus the pair-block id of each consecutive edge.
struct PairCycle {
  std::vector<int> cycle;   // point indices, cycle order
  std::vector<int> block;   // block id of edge (cycle[i], cycle[i+1])
};

inline PairCycle pair_cycle(const std::vector<Point>& pts,
                            const std::vector<int>& order, bool odd_upper) {
  const int n = static_cast<int>(order.size());
  const int k = n / 2;
  std::vector<int> down, up;
  for (int i = 0; i < k; ++i) {
    const int a = order[static_cast<size_t>(2 * i)];
    const int b = order[static_cast<size_t>(2 * i + 1)];
    const Point& pa = pts[static_cast<size_t>(a)];
    const Point& pb = pts[static_cast<size_t>(b)];
    if (std::pair(pa.y, pa.x) <= std::pair(pb.y, pb.x)) {
      down.push_back(a);
      up.push_back(b);
    } else {
      down.push_back(b);
      up.push_back(a);
    }
  }
  const int nblocks = k + (n % 2 ? 1 : 0);
  if (n % 2 == 1) {
    (odd_upper ? up : down).push_back(order.back());
  }
  PairCycle out;
  for (int d : down) out.cycle.push_back(d);
  for (size_t i = up.size(); i-- > 0;) out.cycle.push_back(up[i]);
  // Edge blocks in cycle order: lower chain, far closer, upper chain
  // (reversed), near closer.
  for (size_t i = 0; i + 1 < down.size(); ++i) {
    out.block.push_back(static_cast<int>(i));
  }
  out.block.push_back(nblocks - 1);
  for (size_t i = up.size(); i-- > 1;) {
    out.block.push_back(static_cast<int>(i - 1));
  }
  out.block.push_back(0);
  return out;
}

// Exact planarity gate for the pair construction. Blocks are consecutive in
// x (at most two points ever share a column once equal-x triples are
// rejected), so edges more than two blocks apart cannot interact; checking
// pairs within the band decides planarity of the whole drawing. Edges are
// bucketed by block — every bucket holds O(1) edges — so the scan is linear
// and the whole construction stays sort-dominated.
inline bool pair_cycle_planar(const std::vector<Point>& pts,
                              const PairCycle& pc) {
  const size_t m = pc.cycle.size();
  int nblocks = 0;
  for (int b : pc.block) nblocks = std::max(nblocks, b + 1);
  std::vector<std::vector<int>> bucket(static_cast<size_t>(nblocks));
  for (size_t e = 0; e < m; ++e) {
    bucket[static_cast<size_t>(pc.block[e])].push_back(static_cast<int>(e));
  }
  const auto bad = [&](size_t i, size_t j) {
    const Point& a = pts[static_cast<size_t>(pc.cycle[i])];
    const Point& b = pts[static_cast<size_t>(pc.cycle[(i + 1) % m])];
    const Point& c = pts[static_cast<size_t>(pc.cycle[j])];
    const Point& d = pts[static_cast<size_t>(pc.cycle[(j + 1) % m])];
    return bad_edge_pair(a, b, c, d);
  };
  for (int b = 0; b < nblocks; ++b) {
    for (int db = 0; db <= 2 && b + db < nblocks; ++db) {
      for (int e1 : bucket[static_cast<size_t>(b)]) {
        for (int e2 : bucket[static_cast<size_t>(b + db)]) {
          if (db == 0 && e2 <= e1) continue;  // same bucket: each pair once
          if (bad(static_cast<size_t>(e1), static_cast<size_t>(e2))) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

inline Embedding cycle_embedding(const std::vector<int>& cycle,
                                 const char* note) {
  Embedding E;
  E.mapping = cycle;
  const size_t m = cycle.size();
  for (size_t i = 0; i < m; ++i) {
    E.edges.push_back(ordered_edge(cycle[i], cycle[(i + 1) % m]));
  }
  std::sort(E.edges.begin(), E.edges.end());
  E.optimal_claimed = true;  // a tour of all points is as large as it gets
  E.diagnostics.push_back(note);
  return E;
}

}  // namespace detail

// Straight-line path through all points in lexicographic (x, then y) order.
// Between lex-consecutive points no third point can lie on the segment and
// no two segments can cross or overlap, so the drawing is planar outright.
inline Result<Embedding> embed_path_pointset(const std::vector<Point>& pts) {
  if (pts.size() < 2) {
    return Result<Embedding>::failure(
        Errc::TooFewPoints,
        "path needs >= 2 points, got " + std::to_string(pts.size()));
  }
  const std::vector<int> order = detail::lex_order(pts);
  if (auto dup = detail::reject_duplicates(pts, order); !dup.ok()) return dup;
  Embedding E;
  E.mapping = order;
  for (size_t i = 0; i + 1 < order.size(); ++i) {
    E.edges.push_back(ordered_edge(order[i], order[i + 1]));
  }
  std::sort(E.edges.begin(), E.edges.end());
  E.optimal_claimed = true;
  return E;
}

// Straight-line cycle through all points. The pair construction is tried
// first (odd leftover on the lower chain, then the upper), gated by the
// exact windowed planarity check; when the input's geometry defeats it, the
// deterministic fallback splits the points along the line through the two
// lex-extremes into two monotone chains, which is planar whenever no third
// point lies on that line. Collinearity is only rejected where it actually
// breaks a construction, so large well-spread inputs never pay for an all-
// triples scan.
inline Result<Embedding> embed_cycle_pointset(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 4) {
    return Result<Embedding>::failure(
        Errc::TooFewPoints,
        "cycle needs >= 4 points, got " + std::to_string(n));
  }
  const std::vector<int> order = detail::lex_order(pts);
  if (auto dup = detail::reject_duplicates(pts, order); !dup.ok()) return dup;
  for (int i = 0; i + 2 < n; ++i) {
    const auto x0 = pts[static_cast<size_t>(order[static_cast<size_t>(i)])].x;
    const auto x1 =
        pts[static_cast<size_t>(order[static_cast<size_t>(i + 1)])].x;
    const auto x2 =
        pts[static_cast<size_t>(order[static_cast<size_t>(i + 2)])].x;
    if (x0 == x1 && x1 == x2) {
      return Result<Embedding>::failure(
          Errc::CollinearTriple,
          "points " + std::to_string(order[static_cast<size_t>(i)]) + ", " +
              std::to_string(order[static_cast<size_t>(i + 1)]) + ", " +
              std::to_string(order[static_cast<size_t>(i + 2)]) +
              " share x = " + std::to_string(x0));
    }
  }

  detail::PairCycle pc = detail::pair_cycle(pts, order, false);
  if (detail::pair_cycle_planar(pts, pc)) {
    return detail::cycle_embedding(pc.cycle, "pair-construction");
  }
  if (n % 2 == 1) {
    pc = detail::pair_cycle(pts, order, true);
    if (detail::pair_cycle_planar(pts, pc)) {
      return detail::cycle_embedding(pc.cycle, "pair-construction:odd-upper");
    }
  }

  // Fallback: lex-extremes A, B; points right of the directed line A->B form
  // the lower chain, points left of it the upper chain, both lex-sorted.
  // Each chain stays strictly on its side, so the two closed chains meet
  // only at A and B.
  const int ia = order.front();
  const int ib = order.back();
  const Point& A = pts[static_cast<size_t>(ia)];
  const Point& B = pts[static_cast<size_t>(ib)];
  std::vector<int> below, above;
  for (size_t i = 1; i + 1 < order.size(); ++i) {
    const int p = order[i];
    const Orientation o = orientation(A, B, pts[static_cast<size_t>(p)]);
    if (o == Orientation::Collinear) {
      return Result<Embedding>::failure(
          Errc::CollinearTriple,
          "points " + std::to_string(ia) + ", " + std::to_string(p) + ", " +
              std::to_string(ib) + " are collinear");
    }
    (o == Orientation::CW ? below : above).push_back(p);
  }
  std::vector<int> cycle;
  cycle.push_back(ia);
  for (int p : below) cycle.push_back(p);
  cycle.push_back(ib);
  for (size_t i = above.size(); i-- > 0;) cycle.push_back(above[i]);
  Embedding E = detail::cycle_embedding(cycle, "fallback-split");
  if (n <= 4096) {
    const auto viols = verify_pointset_embedding(
        pts, E, GraphSpec{GraphKind::Cycle, n}, true);
    if (!viols.empty()) {
      return Result<Embedding>::failure(
          Errc::CollinearTriple, "fallback produced a non-planar cycle");
    }
  }
  return E;
}

}  // namespace polyembed
