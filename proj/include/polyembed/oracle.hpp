#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polyembed/core.hpp"
#include "polyembed/embedding.hpp"
#include "polyembed/geometry.hpp"
#include "polyembed/polygon.hpp"
#include "polyembed/visibility.hpp"

namespace polyembed {

// Exhaustive-search caps: path/cycle search is factorial-ish, clique search
// merely exponential, so cliques get more headroom.
inline constexpr int kOraclePathCycleCap = 16;
inline constexpr int kOracleCliqueCap = 20;

struct OracleResult {
  int size = 0;            // max edge count (clique: node count); 0 = nothing
  Embedding witness;       // canonical optimum; empty when size == 0
  std::uint64_t explored = 0;  // search-tree nodes visited
  bool cap_respected = true;
};

namespace detail {

struct ChordMatrix {
  int n = 0;
  std::vector<char> m;
  bool at(int i, int j) const {
    return m[static_cast<size_t>(i) * static_cast<size_t>(n) +
             static_cast<size_t>(j)] != 0;
  }
};

inline ChordMatrix chord_matrix(const Polygon& P) {
  ChordMatrix cm;
  cm.n = P.n();
  cm.m.assign(static_cast<size_t>(cm.n) * static_cast<size_t>(cm.n), 0);
  for (int i = 0; i < cm.n; ++i) {
    for (int j = i + 1; j < cm.n; ++j) {
      if (is_interior_chord(P, i, j)) {
        cm.m[static_cast<size_t>(i) * static_cast<size_t>(cm.n) +
             static_cast<size_t>(j)] = 1;
        cm.m[static_cast<size_t>(j) * static_cast<size_t>(cm.n) +
             static_cast<size_t>(i)] = 1;
      }
    }
  }
  return cm;
}

// Drawn-edge conflict: edges sharing an endpoint may only overlap; disjoint
// edges may neither properly cross nor overlap.
inline bool edges_conflict(const Polygon& P, std::pair<int, int> e1,
                           std::pair<int, int> e2) {
  const Segment s1{P.vertex(e1.first), P.vertex(e1.second)};
  const Segment s2{P.vertex(e2.first), P.vertex(e2.second)};
  const bool shared = e1.first == e2.first || e1.first == e2.second ||
                      e1.second == e2.first || e1.second == e2.second;
  if (shared) return collinear_overlap(s1, s2);
  return proper_intersect(s1, s2) || collinear_overlap(s1, s2);
}

// Backtracking state shared by the cycle and path searches.
struct SeqSearch {
  const Polygon& P;
  const ChordMatrix& M;
  std::vector<int> seq;
  std::vector<std::pair<int, int>> edges;
  std::vector<char> used;
  std::uint64_t explored = 0;
  int best_size = 0;
  std::vector<int> best_seq;

  explicit SeqSearch(const Polygon& p, const ChordMatrix& m)
      : P(p), M(m), used(static_cast<size_t>(p.n()), 0) {}

  bool new_edge_conflicts(int u, int v) const {
    for (const auto& e : edges) {
      if (edges_conflict(P, e, {u, v})) return true;
    }
    return false;
  }

  void offer(int size) {
    if (size > best_size ||
        (size == best_size && (best_seq.empty() || seq < best_seq))) {
      best_size = size;
      best_seq = seq;
    }
  }
};

}  // namespace detail

// Vertices to observations: a "window" is three successive members of the
// polygon's cyclic sequence of non-isolated vertices; in_cycle counts how
// many of the three the cycle uses. One window per cyclic start position.
struct WindowViolation {
  int v0, v1, v2;
  int in_cycle;

  friend bool operator==(const WindowViolation&,
                         const WindowViolation&) = default;
};

namespace detail {

inline std::vector<WindowViolation> windows_with(
    const Polygon& P, const std::vector<int>& cycle_vertices, bool over) {
  const std::vector<int> ni = [&] {
    std::vector<char> iso(static_cast<size_t>(P.n()), 0);
    for (int v : isolated_vertices(P)) iso[static_cast<size_t>(v)] = 1;
    std::vector<int> out;
    for (int v = 0; v < P.n(); ++v) {
      if (!iso[static_cast<size_t>(v)]) out.push_back(v);
    }
    return out;
  }();
  std::vector<WindowViolation> out;
  if (ni.size() < 3) return out;
  std::vector<char> in_c(static_cast<size_t>(P.n()), 0);
  for (int v : cycle_vertices) in_c[static_cast<size_t>(v)] = 1;
  const size_t k = ni.size();
  for (size_t i = 0; i < k; ++i) {
    const int a = ni[i];
    const int b = ni[(i + 1) % k];
    const int c = ni[(i + 2) % k];
    const int cnt = in_c[static_cast<size_t>(a)] + in_c[static_cast<size_t>(b)] +
                    in_c[static_cast<size_t>(c)];
    if (over ? cnt > 2 : cnt < 1) out.push_back({a, b, c, cnt});
  }
  return out;
}

}  // namespace detail

// Windows of three successive non-isolated vertices that the cycle misses
// entirely (the cycle should touch every such window at least once).
inline std::vector<WindowViolation> windows_missing_cycle(
    const Polygon& P, const std::vector<int>& cycle_vertices) {
  return detail::windows_with(P, cycle_vertices, false);
}

// Windows of three successive non-isolated vertices of which the cycle uses
// all three (at most two should ever be on the cycle).
inline std::vector<WindowViolation> windows_overfull(
    const Polygon& P, const std::vector<int>& cycle_vertices) {
  return detail::windows_with(P, cycle_vertices, true);
}

// Exact maximum planar embedded cycle among those visiting every vertex in
// `required`. Backtracking over vertex sequences with canonical start (the
// cycle's smallest vertex first) and direction (second element smaller than
// last); geometric conflict pruning at every extension. The witness is the
// lexicographically smallest optimal sequence.
inline Result<OracleResult> oracle_max_cycle_containing(
    const Polygon& P, const std::vector<int>& required,
    int cap = kOraclePathCycleCap) {
  const int n = P.n();
  if (n > cap) {
    return Result<OracleResult>::failure(
        Errc::PolygonTooLarge,
        std::to_string(n) + " vertices exceeds oracle cap " +
            std::to_string(cap));
  }
  std::vector<char> req(static_cast<size_t>(n), 0);
  for (int v : required) {
    if (v < 0 || v >= n) {
      return Result<OracleResult>::failure(Errc::IndexOutOfRange,
                                           "required vertex " +
                                               std::to_string(v));
    }
    req[static_cast<size_t>(v)] = 1;
  }
  const detail::ChordMatrix M = detail::chord_matrix(P);
  detail::SeqSearch st(P, M);

  const auto required_met = [&] {
    for (int v = 0; v < n; ++v) {
      if (req[static_cast<size_t>(v)] && !st.used[static_cast<size_t>(v)]) {
        return false;
      }
    }
    return true;
  };

  const auto dfs = [&](auto&& self, int s) -> void {
    ++st.explored;
    const int L = static_cast<int>(st.seq.size());
    if (L >= 3 && st.seq[1] < st.seq.back() && M.at(st.seq.back(), s) &&
        !st.new_edge_conflicts(st.seq.back(), s) && required_met()) {
      st.offer(L);
    }
    for (int v = s + 1; v < n; ++v) {
      if (st.used[static_cast<size_t>(v)] || !M.at(st.seq.back(), v)) continue;
      if (st.new_edge_conflicts(st.seq.back(), v)) continue;
      st.edges.emplace_back(st.seq.back(), v);
      st.seq.push_back(v);
      st.used[static_cast<size_t>(v)] = 1;
      self(self, s);
      st.used[static_cast<size_t>(v)] = 0;
      st.seq.pop_back();
      st.edges.pop_back();
    }
  };

  for (int s = 0; s < n; ++s) {
    st.seq.assign(1, s);
    st.edges.clear();
    std::fill(st.used.begin(), st.used.end(), 0);
    st.used[static_cast<size_t>(s)] = 1;
    dfs(dfs, s);
  }

  OracleResult out;
  out.explored = st.explored;
  if (st.best_size >= 3) {
    out.size = st.best_size;
    out.witness.mapping = st.best_seq;
    for (size_t i = 0; i < st.best_seq.size(); ++i) {
      out.witness.edges.push_back(ordered_edge(
          st.best_seq[i], st.best_seq[(i + 1) % st.best_seq.size()]));
    }
    std::sort(out.witness.edges.begin(), out.witness.edges.end());
    out.witness.optimal_claimed = true;
  }
  return out;
}

inline Result<OracleResult> oracle_max_cycle(const Polygon& P,
                                             int cap = kOraclePathCycleCap) {
  return oracle_max_cycle_containing(P, {}, cap);
}

// Exact maximum planar embedded path (size = edge count). Full enumeration
// from every start vertex with conflict pruning; both directions of every
// path are explored, so keeping the lexicographically smallest optimal
// sequence canonicalizes direction for free.
inline Result<OracleResult> oracle_max_path(const Polygon& P,
                                            int cap = kOraclePathCycleCap) {
  const int n = P.n();
  if (n > cap) {
    return Result<OracleResult>::failure(
        Errc::PolygonTooLarge,
        std::to_string(n) + " vertices exceeds oracle cap " +
            std::to_string(cap));
  }
  const detail::ChordMatrix M = detail::chord_matrix(P);
  detail::SeqSearch st(P, M);

  const auto dfs = [&](auto&& self) -> void {
    ++st.explored;
    if (st.seq.size() >= 2) st.offer(static_cast<int>(st.seq.size()) - 1);
    for (int v = 0; v < n; ++v) {
      if (st.used[static_cast<size_t>(v)] || !M.at(st.seq.back(), v)) continue;
      if (st.new_edge_conflicts(st.seq.back(), v)) continue;
      st.edges.emplace_back(st.seq.back(), v);
      st.seq.push_back(v);
      st.used[static_cast<size_t>(v)] = 1;
      self(self);
      st.used[static_cast<size_t>(v)] = 0;
      st.seq.pop_back();
      st.edges.pop_back();
    }
  };

  for (int s = 0; s < n; ++s) {
    st.seq.assign(1, s);
    st.edges.clear();
    std::fill(st.used.begin(), st.used.end(), 0);
    st.used[static_cast<size_t>(s)] = 1;
    dfs(dfs);
  }

  OracleResult out;
  out.explored = st.explored;
  if (st.best_size >= 1) {
    out.size = st.best_size;
    out.witness.mapping = st.best_seq;
    for (size_t i = 0; i + 1 < st.best_seq.size(); ++i) {
      out.witness.edges.push_back(
          ordered_edge(st.best_seq[i], st.best_seq[i + 1]));
    }
    std::sort(out.witness.edges.begin(), out.witness.edges.end());
    out.witness.optimal_claimed = true;
  }
  return out;
}

// Exact maximum set of vertices pairwise joined by interior chords (size =
// node count, at least 2; planarity deliberately not required). Ascending
// extension keeps every clique explored exactly once; the witness is the
// lexicographically smallest optimal vertex list.
inline Result<OracleResult> oracle_max_clique(const Polygon& P,
                                              int cap = kOracleCliqueCap) {
  const int n = P.n();
  if (n > cap) {
    return Result<OracleResult>::failure(
        Errc::PolygonTooLarge,
        std::to_string(n) + " vertices exceeds oracle cap " +
            std::to_string(cap));
  }
  const detail::ChordMatrix M = detail::chord_matrix(P);
  std::vector<int> cur;
  std::vector<int> best;
  std::uint64_t explored = 0;

  const auto dfs = [&](auto&& self, int from) -> void {
    ++explored;
    if (cur.size() >= 2 &&
        (cur.size() > best.size() || (cur.size() == best.size() && cur < best))) {
      best = cur;
    }
    for (int v = from; v < n; ++v) {
      bool fits = true;
      for (int u : cur) {
        if (!M.at(u, v)) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);

  OracleResult out;
  out.explored = explored;
  if (!best.empty()) {
    out.size = static_cast<int>(best.size());
    out.witness.mapping = best;
    for (size_t i = 0; i < best.size(); ++i) {
      for (size_t j = i + 1; j < best.size(); ++j) {
        out.witness.edges.push_back(ordered_edge(best[i], best[j]));
      }
    }
    std::sort(out.witness.edges.begin(), out.witness.edges.end());
    out.witness.optimal_claimed = true;
  }
  return out;
}

}  // namespace polyembed
