#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace polyembed {

enum class GraphKind { Path, Cycle, Clique };

inline const char* graph_kind_name(GraphKind k) {
  switch (k) {
    case GraphKind::Path: return "path";
    case GraphKind::Cycle: return "cycle";
    case GraphKind::Clique: return "clique";
  }
  return "?";
}

// The abstract graph being embedded. size counts edges for a path or cycle
// and nodes for a clique; node labels are 0..nodes()-1 and the edge set is
// implied by the kind.
struct GraphSpec {
  GraphKind kind = GraphKind::Path;
  int size = 0;

  int nodes() const {
    switch (kind) {
      case GraphKind::Path: return size + 1;
      case GraphKind::Cycle: return size;
      case GraphKind::Clique: return size;
    }
    return 0;
  }

  // Canonical edge list over node labels: consecutive pairs for a path, plus
  // the closing pair for a cycle, all pairs for a clique.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    const int m = nodes();
    switch (kind) {
      case GraphKind::Path:
        for (int i = 0; i + 1 < m; ++i) out.emplace_back(i, i + 1);
        break;
      case GraphKind::Cycle:
        for (int i = 0; i + 1 < m; ++i) out.emplace_back(i, i + 1);
        if (m >= 3) out.emplace_back(0, m - 1);
        break;
      case GraphKind::Clique:
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j) out.emplace_back(i, j);
        break;
    }
    return out;
  }
};

// A concrete placement: mapping[node] is the polygon vertex (or point index)
// carrying that node, and edges lists the drawn segments in vertex terms,
// each pair ordered (min, max) and the list sorted. diagnostics records any
// repair decisions a constructor made; optimal_claimed says the constructor
// believes no larger embedding of the same kind exists on this input.
struct Embedding {
  std::vector<int> mapping;
  std::vector<std::pair<int, int>> edges;
  bool optimal_claimed = false;
  std::vector<std::string> diagnostics;

  int size() const { return static_cast<int>(mapping.size()); }
};

inline std::pair<int, int> ordered_edge(int a, int b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

// Normalizes an edge list in place: each pair (min, max), list sorted.
inline void canonicalize_edges(std::vector<std::pair<int, int>>& edges) {
  for (auto& e : edges) e = ordered_edge(e.first, e.second);
  std::sort(edges.begin(), edges.end());
}

// Builds the vertex-level edge list for a mapping under a graph spec,
// already canonicalized.
inline std::vector<std::pair<int, int>> map_edges(
    const GraphSpec& g, const std::vector<int>& mapping) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [u, v] : g.edges()) {
    out.push_back(ordered_edge(mapping[static_cast<size_t>(u)],
                               mapping[static_cast<size_t>(v)]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polyembed
