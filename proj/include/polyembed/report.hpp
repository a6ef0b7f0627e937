#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <string>
#include <vector>

#include "json.hpp"
#include "polyembed/core.hpp"
#include "polyembed/generators.hpp"
#include "polyembed/io.hpp"
#include "polyembed/oracle.hpp"
#include "polyembed/polygon.hpp"
#include "polyembed/polygon_embed.hpp"
#include "polyembed/verifier.hpp"
#include "polyembed/visibility.hpp"

namespace polyembed {

// '#' header recorded with every generated or dumped polygon so the exact
// generator invocation can be replayed from the file alone.
inline std::string gen_comment(const GenConfig& cfg) {
  return "kind=" + std::string(gen_kind_name(cfg.kind)) +
         " n=" + std::to_string(cfg.n) + " seed=" + std::to_string(cfg.seed) +
         " reflex_target=" + std::to_string(cfg.reflex_target) +
         " span=" + std::to_string(cfg.coordinate_span);
}

struct CompareConfig {
  int trials = 100;
  int min_n = 8;
  int max_n = 14;
  std::uint64_t seed = 0;
  int oracle_cap = kOraclePathCycleCap;
  std::string out_root = ".";
};

struct CompareRow {
  int n = 0;
  std::uint64_t seed = 0;
  int reflex_target = 0;
  int isolated_count = 0;
  int greedy_size = 0;       // cycle length found by the greedy construction
  bool greedy_valid = false; // passed full planar verification
  bool oracle_ran = false;   // n within the oracle cap
  int oracle_size = 0;
  int constrained_size = 0;  // maximum cycle through every reflex vertex
  bool greedy_agree = false;
  bool constrained_agree = false;
  std::vector<std::string> counterexamples;  // file names inside out_dir
};

struct CompareReport {
  CompareConfig cfg;
  std::string command;
  std::string digest;
  std::string out_dir;
  std::vector<CompareRow> rows;
  int oracle_runs = 0;
  int greedy_agreements = 0;
  int constrained_agreements = 0;
  int greedy_above_oracle = 0;  // must stay 0; the oracle is exact
  double mean_size_ratio = 0.0;
  std::vector<std::string> counterexample_files;  // sorted, unique
  // Wall-clock milliseconds, reported on the diagnostic stream only so the
  // JSON report stays byte-identical across reruns.
  double gen_ms = 0.0, greedy_ms = 0.0, oracle_ms = 0.0;
};

inline Result<CompareReport> run_compare(const CompareConfig& cfg) {
  if (cfg.trials < 1 || cfg.min_n < 6 || cfg.max_n < cfg.min_n) {
    return Result<CompareReport>::failure(
        Errc::SizeOutOfRange, "need trials >= 1 and 6 <= min_n <= max_n");
  }
  CompareReport rep;
  rep.cfg = cfg;
  rep.command = "compare --trials " + std::to_string(cfg.trials) +
                " --n-range " + std::to_string(cfg.min_n) + ":" +
                std::to_string(cfg.max_n) + " --seed " +
                std::to_string(cfg.seed) + " --cap " +
                std::to_string(cfg.oracle_cap);
  rep.digest = fnv1a_hex(rep.command);
  rep.out_dir = (std::filesystem::path(cfg.out_root) /
                 ("compare-" + rep.digest))
                    .generic_string();

  std::error_code fs_ec;
  std::filesystem::create_directories(rep.out_dir, fs_ec);
  if (fs_ec) {
    return Result<CompareReport>::failure(Errc::IoFailure,
                                          "cannot create " + rep.out_dir);
  }

  using clock = std::chrono::steady_clock;
  const auto ms_since = [](clock::time_point from) {
    return std::chrono::duration<double, std::milli>(clock::now() - from)
        .count();
  };

  std::mt19937_64 master(cfg.seed);
  double ratio_sum = 0.0;

  for (int t = 0; t < cfg.trials; ++t) {
    CompareRow row;
    row.n = cfg.min_n + static_cast<int>(rand_below(
                            master, static_cast<std::uint64_t>(cfg.max_n -
                                                               cfg.min_n + 1)));
    const int rt_count = std::max(1, row.n / 2 - 2);
    row.reflex_target =
        1 + static_cast<int>(rand_below(master,
                                        static_cast<std::uint64_t>(rt_count)));
    row.seed = rand_below(master, 1ull << 30);

    GenConfig gc;
    gc.kind = GenKind::PseudoConvex;
    gc.n = row.n;
    gc.reflex_target = row.reflex_target;
    auto t0 = clock::now();
    Result<Polygon> gen = Result<Polygon>::failure(Errc::GenerationFailed, "");
    for (std::uint64_t bump = 0; bump < 64 && !gen.ok(); ++bump) {
      gc.seed = row.seed + bump;
      gen = gen_pseudo_convex(gc);
    }
    rep.gen_ms += ms_since(t0);
    if (!gen.ok()) {
      return Result<CompareReport>::failure(
          Errc::GenerationFailed,
          "trial " + std::to_string(t) + ": n=" + std::to_string(row.n) +
              " reflex_target=" + std::to_string(row.reflex_target));
    }
    const Polygon& P = gen.value();
    row.seed = gc.seed;  // the seed that actually produced the polygon
    row.isolated_count = static_cast<int>(isolated_vertices(P).size());

    t0 = clock::now();
    const auto greedy = embed_max_cycle_pseudo_convex(P, /*oracle_cap=*/0);
    rep.greedy_ms += ms_since(t0);
    const GraphSpec cyc{GraphKind::Cycle, greedy.ok() ? greedy.value().size()
                                                      : 0};
    if (greedy.ok()) {
      row.greedy_size = greedy.value().size();
      row.greedy_valid = embedding_ok(P, greedy.value(), cyc, true);
    }

    if (P.n() <= cfg.oracle_cap) {
      row.oracle_ran = true;
      ++rep.oracle_runs;
      t0 = clock::now();
      const auto best = oracle_max_cycle(P, cfg.oracle_cap);
      const auto constrained =
          oracle_max_cycle_containing(P, reflex_vertices(P), cfg.oracle_cap);
      rep.oracle_ms += ms_since(t0);
      row.oracle_size = best.value().size;
      row.constrained_size = constrained.value().size;

      row.greedy_agree = row.greedy_size == row.oracle_size;
      row.constrained_agree = row.constrained_size == row.oracle_size;
      rep.greedy_agreements += row.greedy_agree;
      rep.constrained_agreements += row.constrained_agree;
      rep.greedy_above_oracle += row.greedy_size > row.oracle_size;
      ratio_sum += row.oracle_size == 0
                       ? 1.0
                       : static_cast<double>(row.greedy_size) /
                             static_cast<double>(row.oracle_size);

      const auto dump = [&](const char* category) {
        const std::string name = std::string(category) + "-n" +
                                 std::to_string(row.n) + "-seed" +
                                 std::to_string(row.seed) + ".poly";
        const auto wr = write_text_file(
            (std::filesystem::path(rep.out_dir) / name).generic_string(),
            points_text(P.vertices,
                        {gen_comment(gc), std::string("category=") +
                                              category}));
        if (wr.ok()) row.counterexamples.push_back(name);
      };
      if (!row.greedy_agree || !row.greedy_valid) dump("greedy-below-oracle");
      if (!row.constrained_agree) dump("reflex-constrained-below-max");
    }
    rep.rows.push_back(std::move(row));
  }

  std::stable_sort(rep.rows.begin(), rep.rows.end(),
                   [](const CompareRow& a, const CompareRow& b) {
                     return a.n != b.n ? a.n < b.n : a.seed < b.seed;
                   });
  for (const CompareRow& r : rep.rows) {
    for (const std::string& f : r.counterexamples) {
      rep.counterexample_files.push_back(f);
    }
  }
  std::sort(rep.counterexample_files.begin(), rep.counterexample_files.end());
  rep.mean_size_ratio =
      rep.oracle_runs ? ratio_sum / static_cast<double>(rep.oracle_runs) : 0.0;
  return rep;
}

inline nlohmann::json compare_report_json(const CompareReport& rep) {
  nlohmann::json j;
  j["command"] = rep.command;
  j["digest"] = rep.digest;
  j["out_dir"] = rep.out_dir;
  auto& rows = j["rows"] = nlohmann::json::array();
  for (const CompareRow& r : rep.rows) {
    nlohmann::json o;
    o["n"] = r.n;
    o["seed"] = r.seed;
    o["reflex_target"] = r.reflex_target;
    o["isolated_count"] = r.isolated_count;
    o["greedy_size"] = r.greedy_size;
    o["greedy_valid"] = r.greedy_valid;
    if (r.oracle_ran) {
      o["oracle_size"] = r.oracle_size;
      o["constrained_size"] = r.constrained_size;
      o["greedy_agree"] = r.greedy_agree;
      o["constrained_agree"] = r.constrained_agree;
    }
    o["counterexamples"] = r.counterexamples;
    rows.push_back(std::move(o));
  }
  auto& s = j["summary"];
  s["trials"] = static_cast<int>(rep.rows.size());
  s["oracle_runs"] = rep.oracle_runs;
  s["greedy_agreements"] = rep.greedy_agreements;
  s["constrained_agreements"] = rep.constrained_agreements;
  s["greedy_above_oracle"] = rep.greedy_above_oracle;
  s["mean_size_ratio"] = rep.mean_size_ratio;
  s["counterexamples"] = rep.counterexample_files;
  return j;
}

}  // namespace polyembed
