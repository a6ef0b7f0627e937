#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "polyembed/core.hpp"
#include "polyembed/embedding.hpp"
#include "polyembed/geometry.hpp"

namespace polyembed {

// Text format shared by polygons and point sets: one "x y" pair per line,
// blank lines and lines starting with '#' ignored.
inline Result<std::vector<Point>> parse_points_text(const std::string& text) {
  std::vector<Point> pts;
  int lineno = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream ls(line);
    std::string tok_x, tok_y, extra;
    ls >> tok_x >> tok_y;
    if (tok_y.empty() || (ls >> extra)) {
      return Result<std::vector<Point>>::failure(
          Errc::ParseError, "line " + std::to_string(lineno) +
                                ": expected exactly two integers");
    }
    Point p{};
    for (const auto& [tok, dst] : {std::pair{&tok_x, &p.x}, {&tok_y, &p.y}}) {
      const auto res = std::from_chars(tok->data(), tok->data() + tok->size(),
                                       *dst);
      if (res.ec != std::errc() || res.ptr != tok->data() + tok->size()) {
        return Result<std::vector<Point>>::failure(
            Errc::ParseError, "line " + std::to_string(lineno) +
                                  ": not an integer: '" + *tok + "'");
      }
    }
    if (p.x < -kCoordLimit || p.x > kCoordLimit || p.y < -kCoordLimit ||
        p.y > kCoordLimit) {
      return Result<std::vector<Point>>::failure(
          Errc::CoordinateOutOfRange,
          "line " + std::to_string(lineno) + ": |coordinate| > 2^30");
    }
    pts.push_back(p);
  }
  return pts;
}

inline std::string points_text(const std::vector<Point>& pts,
                               const std::vector<std::string>& comments = {}) {
  std::string out;
  for (const auto& c : comments) {
    out += "# ";
    out += c;
    out += "\n";
  }
  for (const Point& p : pts) {
    out += std::to_string(p.x);
    out += " ";
    out += std::to_string(p.y);
    out += "\n";
  }
  return out;
}

inline Result<std::string> read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return Result<std::string>::failure(Errc::IoFailure,
                                        "cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    return Result<std::string>::failure(Errc::IoFailure,
                                        "read error on " + path);
  }
  return buf.str();
}

inline Result<bool> write_text_file(const std::string& path,
                                    const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return Result<bool>::failure(Errc::IoFailure, "cannot open " + path);
  }
  out << content;
  out.flush();
  if (!out) {
    return Result<bool>::failure(Errc::IoFailure, "write error on " + path);
  }
  return true;
}

// One canonical machine-readable schema: the input vertices (under "polygon"
// or "points"), the abstract graph, the node-to-vertex mapping, the drawn
// edges, and the construction metadata. Keys serialize alphabetically so the
// byte stream is deterministic.
inline nlohmann::json embedding_json(const std::vector<Point>& verts,
                                     const char* verts_key,
                                     const GraphSpec& spec,
                                     const Embedding& E) {
  nlohmann::json j;
  auto& vlist = j[verts_key] = nlohmann::json::array();
  for (const Point& p : verts) vlist.push_back({p.x, p.y});
  auto& g = j["graph"];
  g["kind"] = graph_kind_name(spec.kind);
  g["nodes"] = spec.nodes();
  auto& ge = g["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : spec.edges()) ge.push_back({a, b});
  j["mapping"] = E.mapping;
  auto& ee = j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : E.edges) ee.push_back({a, b});
  j["meta"]["optimal_claimed"] = E.optimal_claimed;
  j["meta"]["diagnostics"] = E.diagnostics;
  return j;
}

inline std::string json_text(const nlohmann::json& j) {
  return j.dump(2) + "\n";
}

struct EmbeddingFile {
  std::vector<Point> vertices;
  bool is_pointset = false;  // true when the JSON used "points"
  GraphSpec spec;
  Embedding embedding;
};

namespace detail {

inline bool json_point_list(const nlohmann::json& j, std::vector<Point>& out) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      return false;
    }
    out.push_back({e[0].get<std::int64_t>(), e[1].get<std::int64_t>()});
  }
  return true;
}

inline bool json_pair_list(const nlohmann::json& j,
                           std::vector<std::pair<int, int>>& out) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      return false;
    }
    out.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return true;
}

}  // namespace detail

inline Result<EmbeddingFile> parse_embedding_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  const auto fail = [](const std::string& what) {
    return Result<EmbeddingFile>::failure(Errc::ParseError,
                                          "embedding JSON: " + what);
  };
  if (j.is_discarded() || !j.is_object()) return fail("not a JSON object");

  EmbeddingFile out;
  const char* vkey = j.contains("polygon") ? "polygon"
                     : j.contains("points") ? "points"
                                            : nullptr;
  if (!vkey) return fail("missing 'polygon' or 'points'");
  out.is_pointset = std::string_view(vkey) == "points";
  if (!detail::json_point_list(j[vkey], out.vertices)) {
    return fail("bad vertex list");
  }
  for (const Point& p : out.vertices) {
    if (p.x < -kCoordLimit || p.x > kCoordLimit || p.y < -kCoordLimit ||
        p.y > kCoordLimit) {
      return Result<EmbeddingFile>::failure(Errc::CoordinateOutOfRange,
                                            "embedding JSON vertex");
    }
  }

  if (!j.contains("graph") || !j["graph"].is_object()) {
    return fail("missing 'graph'");
  }
  const auto& g = j["graph"];
  if (!g.contains("kind") || !g["kind"].is_string() || !g.contains("nodes") ||
      !g["nodes"].is_number_integer()) {
    return fail("graph needs string 'kind' and integer 'nodes'");
  }
  const std::string kind = g["kind"].get<std::string>();
  const int nodes = g["nodes"].get<int>();
  if (kind == "path") {
    out.spec = {GraphKind::Path, nodes - 1};
  } else if (kind == "cycle") {
    out.spec = {GraphKind::Cycle, nodes};
  } else if (kind == "clique") {
    out.spec = {GraphKind::Clique, nodes};
  } else {
    return fail("unknown graph kind '" + kind + "'");
  }

  if (!j.contains("mapping") || !j["mapping"].is_array()) {
    return fail("missing 'mapping'");
  }
  for (const auto& e : j["mapping"]) {
    if (!e.is_number_integer()) return fail("mapping entries must be integers");
    out.embedding.mapping.push_back(e.get<int>());
  }
  if (!j.contains("edges") ||
      !detail::json_pair_list(j["edges"], out.embedding.edges)) {
    return fail("missing or bad 'edges'");
  }
  if (j.contains("meta") && j["meta"].is_object()) {
    const auto& m = j["meta"];
    if (m.contains("optimal_claimed") && m["optimal_claimed"].is_boolean()) {
      out.embedding.optimal_claimed = m["optimal_claimed"].get<bool>();
    }
    if (m.contains("diagnostics") && m["diagnostics"].is_array()) {
      for (const auto& d : m["diagnostics"]) {
        if (d.is_string()) {
          out.embedding.diagnostics.push_back(d.get<std::string>());
        }
      }
    }
  }
  return out;
}

// FNV-1a over a byte string; stamps counterexample directories so reruns of
// the same configuration land in the same place.
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string fnv1a_hex(std::string_view s) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a(s);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace polyembed
