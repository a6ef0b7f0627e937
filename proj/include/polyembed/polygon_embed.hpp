#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polyembed/core.hpp"
#include "polyembed/embedding.hpp"
#include "polyembed/oracle.hpp"
#include "polyembed/polygon.hpp"
#include "polyembed/verifier.hpp"
#include "polyembed/visibility.hpp"

namespace polyembed {

// Path of exactly m chords in a convex polygon. The zig-zag traversal starts
// at vertex n-1, jumps to m, then alternates between a rising counter from 0
// and a falling counter from m-1, so every emitted segment skips at least one
// boundary vertex on each side. Emitting stops after exactly m edges; for odd
// m one more step would land on a polygon edge.
inline Result<Embedding> embed_path_convex(const Polygon& P, int m) {
  if (!is_convex(P)) {
    return Result<Embedding>::failure(Errc::NotConvex, "path construction");
  }
  const int n = P.n();
  if (m < 1 || m > n - 3) {
    return Result<Embedding>::failure(
        Errc::SizeOutOfRange, "path edges m=" + std::to_string(m) +
                                  " outside [1, " + std::to_string(n - 3) +
                                  "]");
  }
  std::vector<int> seq;
  seq.push_back(n - 1);
  int lo = 0;
  int hi = m;
  bool take_hi = true;
  while (static_cast<int>(seq.size()) < m + 1) {
    seq.push_back(take_hi ? hi-- : lo++);
    take_hi = !take_hi;
  }
  Embedding E;
  E.mapping = seq;
  for (size_t i = 0; i + 1 < seq.size(); ++i) {
    E.edges.push_back(ordered_edge(seq[i], seq[i + 1]));
  }
  std::sort(E.edges.begin(), E.edges.end());
  E.optimal_claimed = (m == n - 3);
  return E;
}

// Cycle of k chords on the even-indexed vertices of a convex polygon:
// 0, 2, ..., 2(k-1), closed back to 0. Skipping every other boundary vertex
// keeps all k segments non-adjacent pairs, and consecutive hull vertices of
// the chosen set cannot cross.
inline Result<Embedding> embed_cycle_convex(const Polygon& P, int k) {
  if (!is_convex(P)) {
    return Result<Embedding>::failure(Errc::NotConvex, "cycle construction");
  }
  const int n = P.n();
  if (k < 3) {
    return Result<Embedding>::failure(
        Errc::DegenerateCycle, "cycle needs >= 3 edges, got " +
                                   std::to_string(k));
  }
  if (k > n / 2) {
    return Result<Embedding>::failure(
        Errc::SizeOutOfRange, "cycle edges k=" + std::to_string(k) +
                                  " exceeds " + std::to_string(n / 2));
  }
  Embedding E;
  for (int i = 0; i < k; ++i) E.mapping.push_back(2 * i);
  for (int i = 0; i < k; ++i) {
    E.edges.push_back(ordered_edge(E.mapping[static_cast<size_t>(i)],
                                   E.mapping[static_cast<size_t>((i + 1) % k)]));
  }
  std::sort(E.edges.begin(), E.edges.end());
  E.optimal_claimed = (k == n / 2);
  return E;
}

// Complete graph on the floor(n/2) even-indexed vertices of a convex
// polygon. Every pair is a chord (non-adjacent vertices in convex position);
// chord/chord crossings are allowed — only the boundary is off limits.
inline Result<Embedding> embed_clique_convex(const Polygon& P) {
  if (!is_convex(P)) {
    return Result<Embedding>::failure(Errc::NotConvex, "clique construction");
  }
  const int n = P.n();
  if (n < 4) {
    return Result<Embedding>::failure(
        Errc::TooSmall, "clique needs n >= 4, got " + std::to_string(n));
  }
  const int k = n / 2;
  Embedding E;
  for (int i = 0; i < k; ++i) E.mapping.push_back(2 * i);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      E.edges.push_back(ordered_edge(2 * i, 2 * j));
    }
  }
  std::sort(E.edges.begin(), E.edges.end());
  E.optimal_claimed = true;
  return E;
}

namespace detail {

// Greedy cycle selection state for pseudo-convex polygons. Selection is
// rebuilt from scratch after every repair so the persistent knobs (dropped
// vertices, flipped runs) fully determine the candidate.
struct GreedyState {
  int n;
  std::vector<char> reflex;
  std::vector<char> eligible;  // convex and not isolated
  std::vector<int> reflex_all;  // non-isolated reflex, ascending
  std::set<int> dropped;
  std::set<int> flipped;  // run ids: leading reflex vertex, -1 = whole walk

  std::vector<int> live_reflex() const {
    std::vector<int> out;
    for (int r : reflex_all) {
      if (!dropped.count(r)) out.push_back(r);
    }
    return out;
  }

  // One selection pass. With reflex vertices present: every live reflex is
  // selected, and the convex stretch after each one contributes alternating
  // eligible vertices, keeping cyclic distance >= 2 from the previous pick
  // and from the next reflex. A flipped run skips its first would-be pick,
  // shifting the parity of the whole stretch. With no reflex left: one
  // ascending walk over eligible vertices with the same spacing rule and a
  // wrap-around adjacency trim.
  std::vector<int> build_selection() const {
    const std::vector<int> R = live_reflex();
    std::vector<int> sel;
    if (!R.empty()) {
      for (size_t idx = 0; idx < R.size(); ++idx) {
        const int r = R[idx];
        const int r2 = R[(idx + 1) % R.size()];
        sel.push_back(r);
        bool skip_first = flipped.count(r) != 0;
        int last = r;
        for (int p = (r + 1) % n; p != r2; p = (p + 1) % n) {
          if (eligible[static_cast<size_t>(p)] && !dropped.count(p) &&
              (p - last + n) % n >= 2 && (r2 - p + n) % n >= 2) {
            if (skip_first) {
              skip_first = false;
            } else {
              sel.push_back(p);
              last = p;
            }
          }
        }
      }
    } else {
      std::vector<int> cand;
      for (int v = 0; v < n; ++v) {
        if (eligible[static_cast<size_t>(v)] && !dropped.count(v)) {
          cand.push_back(v);
        }
      }
      if (cand.empty()) return {};
      bool skip_first = flipped.count(-1) != 0;
      int last = -1;
      for (int p : cand) {
        if (last >= 0 && (p - last + n) % n < 2) continue;
        if (skip_first) {
          skip_first = false;
          continue;
        }
        sel.push_back(p);
        last = p;
      }
      if (sel.size() >= 2 && (sel.front() - sel.back() + n) % n < 2) {
        sel.pop_back();
      }
    }
    std::sort(sel.begin(), sel.end());
    return sel;
  }

  // The run a convex vertex belongs to: the nearest live reflex vertex at or
  // before it going counter-clockwise, or -1 for the reflex-free whole walk.
  int run_of(int v) const {
    const std::vector<int> R = live_reflex();
    if (R.empty()) return -1;
    int best_r = -2;
    int best_d = -1;
    for (int r : R) {
      const int d = (v - r + n) % n;
      if (d == 0) return -2;  // v is itself a live reflex vertex
      if (best_d < 0 || d < best_d) {
        best_d = d;
        best_r = r;
      }
    }
    return best_r;
  }
};

inline std::string run_label(int run) {
  return run == -1 ? std::string("whole") : std::to_string(run);
}

inline std::string join(const std::vector<std::string>& parts,
                        const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace detail

// Maximum-effort cycle embedding for pseudo-convex polygons. Every
// non-isolated reflex vertex is selected up front; non-isolated convex
// vertices fill the stretches between them, alternating so that no two
// selected vertices are boundary-adjacent. Candidate chords are then tested,
// and each failure triggers one deterministic repair — flip the parity of
// the offending stretch once, then start dropping vertices (convex before
// reflex, smallest index first) — until the candidate verifies or shrinks
// below a triangle. Dropping a reflex vertex is always recorded in
// diagnostics, as are all other repairs. The oracle double-checks optimality
// when the polygon is small enough (oracle_cap 0 disables that).
inline Result<Embedding> embed_max_cycle_pseudo_convex(
    const Polygon& P, int oracle_cap = kOraclePathCycleCap) {
  if (!is_pseudo_convex(P)) {
    return Result<Embedding>::failure(Errc::NotPseudoConvex,
                                      "u-turn vertices present");
  }
  const int n = P.n();
  if (is_convex(P)) {
    const int k = n / 2;
    if (k < 3) {
      return Result<Embedding>::failure(Errc::NoCycle,
                                        "no-cycle: fewer than 3 usable "
                                        "vertices");
    }
    return embed_cycle_convex(P, k);
  }

  detail::GreedyState st;
  st.n = n;
  st.reflex.assign(static_cast<size_t>(n), 0);
  for (int r : reflex_vertices(P)) st.reflex[static_cast<size_t>(r)] = 1;
  std::vector<char> iso(static_cast<size_t>(n), 0);
  for (int v : isolated_vertices(P)) iso[static_cast<size_t>(v)] = 1;
  st.eligible.assign(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    if (st.reflex[static_cast<size_t>(v)]) {
      if (!iso[static_cast<size_t>(v)]) st.reflex_all.push_back(v);
    } else if (!iso[static_cast<size_t>(v)]) {
      st.eligible[static_cast<size_t>(v)] = 1;
    }
  }

  std::vector<std::string> diagnostics;
  const int round_limit = 4 * n + 8;
  for (int round = 0; round < round_limit; ++round) {
    const std::vector<int> S = st.build_selection();
    if (static_cast<int>(S.size()) < 3) {
      diagnostics.push_back("no-cycle");
      return Result<Embedding>::failure(Errc::NoCycle,
                                        detail::join(diagnostics, "; "));
    }
    const int k = static_cast<int>(S.size());
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < k; ++i) {
      es.emplace_back(S[static_cast<size_t>(i)],
                      S[static_cast<size_t>((i + 1) % k)]);
    }

    // Stage 1: every consecutive pair must be an interior chord.
    int fail_u = -1;
    int fail_v = -1;
    for (const auto& [u, v] : es) {
      if (!is_interior_chord(P, u, v)) {
        fail_u = u;
        fail_v = v;
        break;
      }
    }
    if (fail_u < 0) {
      // Stage 2: no two cycle edges may cross or overlap.
      std::pair<int, int> pf1{-1, -1}, pf2{-1, -1};
      for (size_t i = 0; i < es.size() && pf1.first < 0; ++i) {
        for (size_t j = i + 1; j < es.size(); ++j) {
          if (detail::edges_conflict(P, es[i], es[j])) {
            pf1 = es[i];
            pf2 = es[j];
            break;
          }
        }
      }
      if (pf1.first < 0) {
        Embedding E;
        E.mapping = S;
        E.edges = es;
        canonicalize_edges(E.edges);
        E.diagnostics = diagnostics;
        if (k == n / 2) {
          E.optimal_claimed = true;
        } else if (oracle_cap > 0 && n <= oracle_cap) {
          const auto best = oracle_max_cycle(P, oracle_cap);
          E.diagnostics.push_back("oracle-max:" +
                                  std::to_string(best.value().size));
          E.optimal_claimed = best.value().size == k;
        }
        const auto viols =
            verify_embedding(P, E, GraphSpec{GraphKind::Cycle, k}, true);
        if (!viols.empty()) {
          diagnostics.push_back("internal-verify-failed");
          return Result<Embedding>::failure(Errc::NoCycle,
                                            detail::join(diagnostics, "; "));
        }
        return E;
      }
      // Two chords conflict even though each is interior: retire the
      // smallest convex endpoint, or the smallest endpoint outright when all
      // four are reflex.
      std::set<int> ends{pf1.first, pf1.second, pf2.first, pf2.second};
      int pick = -1;
      for (int v : ends) {
        if (!st.reflex[static_cast<size_t>(v)]) {
          pick = v;
          break;
        }
      }
      if (pick >= 0) {
        st.dropped.insert(pick);
        diagnostics.push_back("drop-convex:" + std::to_string(pick));
      } else {
        const int w = *ends.begin();
        st.dropped.insert(w);
        diagnostics.push_back("drop-reflex:" + std::to_string(w));
      }
      continue;
    }

    // Chord failure (fail_u, fail_v): flip the parity of an endpoint's run
    // if that run is still unflipped, otherwise drop a vertex.
    const bool u_convex = !st.reflex[static_cast<size_t>(fail_u)];
    const bool v_convex = !st.reflex[static_cast<size_t>(fail_v)];
    const int ru = u_convex ? st.run_of(fail_u) : -2;
    const int rv = v_convex ? st.run_of(fail_v) : -2;
    if (u_convex && ru != -2 && !st.flipped.count(ru)) {
      st.flipped.insert(ru);
      diagnostics.push_back("flip-run:" + detail::run_label(ru));
      continue;
    }
    if (v_convex && rv != -2 && !st.flipped.count(rv)) {
      st.flipped.insert(rv);
      diagnostics.push_back("flip-run:" + detail::run_label(rv));
      continue;
    }
    int pick = -1;
    if (u_convex && v_convex) {
      pick = std::min(fail_u, fail_v);
    } else if (u_convex) {
      pick = fail_u;
    } else if (v_convex) {
      pick = fail_v;
    }
    if (pick >= 0) {
      st.dropped.insert(pick);
      diagnostics.push_back("drop-convex:" + std::to_string(pick));
    } else {
      const int w = std::min(fail_u, fail_v);
      st.dropped.insert(w);
      diagnostics.push_back("drop-reflex:" + std::to_string(w));
    }
  }
  diagnostics.push_back("no-cycle:iteration-bound");
  return Result<Embedding>::failure(Errc::NoCycle,
                                    detail::join(diagnostics, "; "));
}

}  // namespace polyembed
