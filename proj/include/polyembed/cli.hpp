#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyembed/core.hpp"
#include "polyembed/generators.hpp"
#include "polyembed/geometry.hpp"
#include "polyembed/io.hpp"
#include "polyembed/oracle.hpp"
#include "polyembed/pointset.hpp"
#include "polyembed/polygon.hpp"
#include "polyembed/polygon_embed.hpp"
#include "polyembed/report.hpp"
#include "polyembed/svg.hpp"
#include "polyembed/verifier.hpp"
#include "polyembed/visibility.hpp"

namespace polyembed {
namespace detail {

// Process exit codes: 0 success, 1 failed verification / no cycle found,
// 2 invalid input, 3 size or cap violation.
inline int exit_for(Errc c) {
  switch (c) {
    case Errc::NoCycle:
      return 1;
    case Errc::SizeOutOfRange:
    case Errc::DegenerateCycle:
    case Errc::TooSmall:
    case Errc::TooFewPoints:
    case Errc::PolygonTooLarge:
    case Errc::GenerationFailed:
    case Errc::InvalidN:
      return 3;
    default:
      return 2;
  }
}

inline int fail(std::ostream& err, const Error& e) {
  err << "error: " << errc_name(e.code);
  if (!e.detail.empty()) err << ": " << e.detail;
  err << "\n";
  return exit_for(e.code);
}

inline Result<Polygon> load_polygon(const std::string& path, bool normalize) {
  const auto text = read_text_file(path);
  if (!text.ok()) return text.error();
  const auto pts = parse_points_text(text.value());
  if (!pts.ok()) return pts.error();
  return validate_polygon(pts.value(), normalize);
}

inline Result<std::vector<Point>> load_points(const std::string& path) {
  const auto text = read_text_file(path);
  if (!text.ok()) return text.error();
  return parse_points_text(text.value());
}

inline nlohmann::json violations_json(const std::vector<Violation>& vs,
                                      bool planar) {
  nlohmann::json j;
  j["ok"] = vs.empty();
  j["planar_checked"] = planar;
  auto& arr = j["violations"] = nlohmann::json::array();
  for (const Violation& v : vs) {
    nlohmann::json o;
    o["kind"] = violation_kind_name(v.kind);
    o["detail"] = v.detail;
    arr.push_back(std::move(o));
  }
  return j;
}

}  // namespace detail

// All commands in one entry point so tests can drive the exact production
// paths with captured streams. `args` excludes the program name.
inline int dispatch(std::vector<std::string> args, std::ostream& out,
                    std::ostream& err) {
  CLI::App app{"polygon graph embeddings: classification, constructions, "
               "exact verification, brute-force oracle",
               "polyembed"};
  app.require_subcommand(1);
  int rc = 0;

  // ---------- analyze ----------
  struct {
    std::string poly, svg;
    bool normalize = false;
  } an;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "classify vertices: convexity, reflex, u-turn, isolated");
  analyze->add_option("poly", an.poly, "polygon text file")->required();
  analyze->add_flag("--normalize", an.normalize,
                    "accept clockwise input by reversing it");
  analyze->add_option("--svg", an.svg, "render the outline to this file");
  analyze->callback([&] {
    const auto P = detail::load_polygon(an.poly, an.normalize);
    if (!P.ok()) {
      rc = detail::fail(err, P.error());
      return;
    }
    const Polygon& p = P.value();
    if (!an.svg.empty()) {
      const auto w = render_svg(an.svg, p.vertices, true, {});
      if (!w.ok()) {
        rc = detail::fail(err, w.error());
        return;
      }
    }
    const IsolatedDetail iso = isolated_vertices_detailed(p);
    nlohmann::json j;
    j["n"] = p.n();
    j["convex"] = is_convex(p);
    j["pseudo_convex"] = is_pseudo_convex(p);
    j["reflex"] = reflex_vertices(p);
    j["u_turn"] = u_turn_vertices(p);
    auto& ue = j["u_turn_edges"] = nlohmann::json::array();
    for (const auto& [a, b] : u_turn_edges(p)) ue.push_back({a, b});
    j["isolated"] = iso.isolated;
    j["isolated_detail"]["card_lt5"] = iso.card_lt5;
    j["isolated_detail"]["card5_adjacent_pair"] = iso.card5_adjacent_pair;
    j["isolated_rule"] = isolated_rule_text();
    j["chord_count"] = static_cast<int>(all_chords(p).size());
    out << json_text(j);
  });

  // ---------- embed ----------
  struct {
    std::string graph, poly, svg;
    int size = -1;
    int oracle_cap = kOraclePathCycleCap;
    bool normalize = false;
  } em;
  CLI::App* embed = app.add_subcommand(
      "embed", "construct a path/cycle/clique embedding on polygon vertices");
  embed->add_option("--graph", em.graph, "graph family")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "clique"}));
  embed->add_option("--size", em.size,
                    "path: edge count (default n-3); cycle on a convex "
                    "polygon: cycle length (default floor(n/2))")
      ->check(CLI::NonNegativeNumber);
  embed->add_option("--oracle-cap", em.oracle_cap,
                    "cycle on a non-convex polygon: confirm optimality "
                    "exhaustively up to this many vertices (0 disables)")
      ->check(CLI::NonNegativeNumber);
  embed->add_option("--svg", em.svg, "render polygon plus edges to this file");
  embed->add_flag("--normalize", em.normalize,
                  "accept clockwise input by reversing it");
  embed->add_option("poly", em.poly, "polygon text file")->required();
  embed->callback([&] {
    const auto P = detail::load_polygon(em.poly, em.normalize);
    if (!P.ok()) {
      rc = detail::fail(err, P.error());
      return;
    }
    const Polygon& p = P.value();
    Result<Embedding> E = Result<Embedding>::failure(Errc::ParseError);
    GraphSpec spec{GraphKind::Path, 0};
    if (em.graph == "path") {
      if (!is_convex(p)) {
        rc = detail::fail(err, {Errc::NotConvex,
                                "path construction needs a convex polygon"});
        return;
      }
      spec = {GraphKind::Path, em.size >= 0 ? em.size : p.n() - 3};
      E = embed_path_convex(p, spec.size);
    } else if (em.graph == "cycle") {
      if (is_convex(p)) {
        spec = {GraphKind::Cycle, em.size >= 0 ? em.size : p.n() / 2};
        E = embed_cycle_convex(p, spec.size);
      } else {
        if (em.size >= 0) {
          err << "error: --size applies only to convex polygons; the "
                 "non-convex construction always emits its maximum cycle\n";
          rc = 2;
          return;
        }
        E = embed_max_cycle_pseudo_convex(p, em.oracle_cap);
        if (E.ok()) spec = {GraphKind::Cycle, E.value().size()};
      }
    } else {  // clique
      if (em.size >= 0) {
        err << "error: --size does not apply to clique embeddings; the size "
               "is always floor(n/2)\n";
        rc = 2;
        return;
      }
      if (!is_convex(p)) {
        rc = detail::fail(err, {Errc::NotConvex,
                                "clique construction needs a convex polygon"});
        return;
      }
      E = embed_clique_convex(p);
      if (E.ok()) spec = {GraphKind::Clique, E.value().size()};
    }
    if (!E.ok()) {
      rc = detail::fail(err, E.error());
      return;
    }
    if (!em.svg.empty()) {
      const auto w = render_svg(em.svg, p.vertices, true, E.value().edges);
      if (!w.ok()) {
        rc = detail::fail(err, w.error());
        return;
      }
    }
    out << json_text(embedding_json(p.vertices, "polygon", spec, E.value()));
  });

  // ---------- embed-points ----------
  struct {
    std::string graph, pts, svg;
  } ep;
  CLI::App* embed_points = app.add_subcommand(
      "embed-points", "embed a spanning path or cycle on a bare point set");
  embed_points->add_option("--graph", ep.graph, "graph family")
      ->required()
      ->check(CLI::IsMember({"path", "cycle"}));
  embed_points->add_option("--svg", ep.svg, "render points plus edges");
  embed_points->add_option("points", ep.pts, "point set text file")
      ->required();
  embed_points->callback([&] {
    const auto pts = detail::load_points(ep.pts);
    if (!pts.ok()) {
      rc = detail::fail(err, pts.error());
      return;
    }
    const bool path = ep.graph == "path";
    const auto E = path ? embed_path_pointset(pts.value())
                        : embed_cycle_pointset(pts.value());
    if (!E.ok()) {
      rc = detail::fail(err, E.error());
      return;
    }
    const int n = static_cast<int>(pts.value().size());
    const GraphSpec spec{path ? GraphKind::Path : GraphKind::Cycle,
                         path ? n - 1 : n};
    if (!ep.svg.empty()) {
      const auto w = render_svg(ep.svg, pts.value(), false, E.value().edges);
      if (!w.ok()) {
        rc = detail::fail(err, w.error());
        return;
      }
    }
    out << json_text(embedding_json(pts.value(), "points", spec, E.value()));
  });

  // ---------- verify ----------
  struct {
    std::string poly, emb;
    bool planar = false;
    bool normalize = false;
  } ve;
  CLI::App* verify = app.add_subcommand(
      "verify", "check an embedding JSON against its polygon or point set");
  verify->add_flag("--planar", ve.planar,
                   "also reject crossings between graph edges");
  verify->add_flag("--normalize", ve.normalize,
                   "accept clockwise input by reversing it");
  verify->add_option("poly", ve.poly, "polygon or point set text file")
      ->required();
  verify->add_option("embedding", ve.emb, "embedding JSON file")->required();
  verify->callback([&] {
    const auto text = read_text_file(ve.emb);
    if (!text.ok()) {
      rc = detail::fail(err, text.error());
      return;
    }
    const auto ef = parse_embedding_json(text.value());
    if (!ef.ok()) {
      rc = detail::fail(err, ef.error());
      return;
    }
    std::vector<Violation> vs;
    if (ef.value().is_pointset) {
      const auto pts = detail::load_points(ve.poly);
      if (!pts.ok()) {
        rc = detail::fail(err, pts.error());
        return;
      }
      if (pts.value() != ef.value().vertices) {
        rc = detail::fail(err, {Errc::ParseError,
                                "embedding JSON points differ from the "
                                "points file"});
        return;
      }
      vs = verify_pointset_embedding(pts.value(), ef.value().embedding,
                                     ef.value().spec, ve.planar);
    } else {
      const auto P = detail::load_polygon(ve.poly, ve.normalize);
      if (!P.ok()) {
        rc = detail::fail(err, P.error());
        return;
      }
      if (P.value().vertices != ef.value().vertices) {
        rc = detail::fail(err, {Errc::ParseError,
                                "embedding JSON polygon differs from the "
                                "polygon file"});
        return;
      }
      vs = verify_embedding(P.value(), ef.value().embedding, ef.value().spec,
                            ve.planar);
    }
    out << json_text(detail::violations_json(vs, ve.planar));
    rc = vs.empty() ? 0 : 1;
  });

  // ---------- oracle ----------
  struct {
    std::string graph, poly;
    int cap = -1;
    bool require_reflex = false;
    bool normalize = false;
  } orc;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "exact maximum embedded path/cycle/clique by brute force");
  oracle->add_option("--graph", orc.graph, "graph family")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "clique"}));
  oracle->add_option("--cap", orc.cap,
                     "largest polygon the search will accept")
      ->check(CLI::NonNegativeNumber);
  oracle->add_flag("--require-reflex", orc.require_reflex,
                   "cycle only: the cycle must visit every reflex vertex");
  oracle->add_flag("--normalize", orc.normalize,
                   "accept clockwise input by reversing it");
  oracle->add_option("poly", orc.poly, "polygon text file")->required();
  oracle->callback([&] {
    if (orc.require_reflex && orc.graph != "cycle") {
      err << "error: --require-reflex applies to --graph cycle only\n";
      rc = 2;
      return;
    }
    const auto P = detail::load_polygon(orc.poly, orc.normalize);
    if (!P.ok()) {
      rc = detail::fail(err, P.error());
      return;
    }
    const Polygon& p = P.value();
    const int cap = orc.cap >= 0 ? orc.cap
                    : orc.graph == "clique" ? kOracleCliqueCap
                                            : kOraclePathCycleCap;
    const auto R = orc.graph == "path" ? oracle_max_path(p, cap)
                   : orc.graph == "clique" ? oracle_max_clique(p, cap)
                   : orc.require_reflex
                       ? oracle_max_cycle_containing(p, reflex_vertices(p),
                                                     cap)
                       : oracle_max_cycle(p, cap);
    if (!R.ok()) {
      rc = detail::fail(err, R.error());
      return;
    }
    const OracleResult& r = R.value();
    nlohmann::json j;
    j["kind"] = orc.graph;
    j["require_reflex"] = orc.require_reflex;
    j["size"] = r.size;
    j["explored"] = r.explored;
    if (r.witness.mapping.empty()) {
      j["witness"] = nullptr;
    } else {
      j["witness"]["mapping"] = r.witness.mapping;
      auto& we = j["witness"]["edges"] = nlohmann::json::array();
      for (const auto& [a, b] : r.witness.edges) we.push_back({a, b});
    }
    out << json_text(j);
  });

  // ---------- generate ----------
  struct {
    std::string kind, svg;
    int n = 0;
    std::uint64_t seed = 0;
    int reflex = -1;
    std::int64_t span = 1'000'000;
  } g;
  CLI::App* generate_cmd = app.add_subcommand(
      "generate", "seeded random polygon (text format on stdout)");
  generate_cmd->add_option("--kind", g.kind, "polygon family")
      ->required()
      ->check(CLI::IsMember({"convex", "pseudoconvex", "ortho"}));
  generate_cmd->add_option("--n", g.n, "vertex count")
      ->required()
      ->check(CLI::PositiveNumber);
  generate_cmd->add_option("--seed", g.seed, "64-bit seed");
  generate_cmd->add_option("--reflex", g.reflex,
                           "pseudoconvex only: reflex vertex count "
                           "(default 1)")
      ->check(CLI::NonNegativeNumber);
  generate_cmd->add_option("--span", g.span, "coordinate span")
      ->check(CLI::PositiveNumber);
  generate_cmd->add_option("--svg", g.svg, "render the outline to this file");
  generate_cmd->callback([&] {
    GenConfig gc;
    gc.kind = g.kind == "convex" ? GenKind::Convex
              : g.kind == "pseudoconvex" ? GenKind::PseudoConvex
                                         : GenKind::OrthoconvexStaircase;
    if (g.reflex >= 0 && gc.kind != GenKind::PseudoConvex) {
      err << "error: --reflex applies to --kind pseudoconvex only\n";
      rc = 2;
      return;
    }
    gc.n = g.n;
    gc.seed = g.seed;
    gc.coordinate_span = g.span;
    gc.reflex_target = gc.kind == GenKind::PseudoConvex
                           ? (g.reflex >= 0 ? g.reflex : 1)
                           : 0;
    const auto P = generate(gc);
    if (!P.ok()) {
      rc = detail::fail(err, P.error());
      return;
    }
    if (!g.svg.empty()) {
      const auto w = render_svg(g.svg, P.value().vertices, true, {});
      if (!w.ok()) {
        rc = detail::fail(err, w.error());
        return;
      }
    }
    out << points_text(P.value().vertices, {gen_comment(gc)});
  });

  // ---------- compare ----------
  struct {
    int trials = 100;
    std::string n_range = "8:14";
    std::uint64_t seed = 0;
    int cap = kOraclePathCycleCap;
    std::string out_root = ".";
  } cp;
  CLI::App* compare = app.add_subcommand(
      "compare", "greedy cycle construction vs exhaustive oracle on seeded "
                 "pseudo-convex polygons; counterexamples dumped as files");
  compare->add_option("--trials", cp.trials, "number of polygons")
      ->check(CLI::PositiveNumber);
  compare->add_option("--n-range", cp.n_range, "vertex count range A:B");
  compare->add_option("--seed", cp.seed, "64-bit master seed");
  compare->add_option("--cap", cp.cap, "oracle size cap")
      ->check(CLI::NonNegativeNumber);
  compare->add_option("--out-root", cp.out_root,
                      "directory that receives the compare-<digest> dir");
  compare->callback([&] {
    CompareConfig cc;
    const auto colon = cp.n_range.find(':');
    bool range_ok = colon != std::string::npos;
    if (range_ok) {
      const char* s = cp.n_range.data();
      auto r1 = std::from_chars(s, s + colon, cc.min_n);
      auto r2 = std::from_chars(s + colon + 1, s + cp.n_range.size(),
                                cc.max_n);
      range_ok = r1.ec == std::errc() && r1.ptr == s + colon &&
                 r2.ec == std::errc() &&
                 r2.ptr == s + cp.n_range.size();
    }
    if (!range_ok) {
      err << "error: --n-range expects A:B with integers A <= B\n";
      rc = 2;
      return;
    }
    cc.trials = cp.trials;
    cc.seed = cp.seed;
    cc.oracle_cap = cp.cap;
    cc.out_root = cp.out_root;
    const auto rep = run_compare(cc);
    if (!rep.ok()) {
      rc = detail::fail(err, rep.error());
      return;
    }
    const std::string text = json_text(compare_report_json(rep.value()));
    const auto wr = write_text_file(rep.value().out_dir + "/manifest.json",
                                    text);
    if (!wr.ok()) {
      rc = detail::fail(err, wr.error());
      return;
    }
    out << text;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "# wall-clock ms: gen=%.1f greedy=%.1f oracle=%.1f\n",
                  rep.value().gen_ms, rep.value().greedy_ms,
                  rep.value().oracle_ms);
    err << buf;
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }
  return rc;
}

}  // namespace polyembed
