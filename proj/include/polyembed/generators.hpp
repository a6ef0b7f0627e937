#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polyembed/core.hpp"
#include "polyembed/geometry.hpp"
#include "polyembed/polygon.hpp"

namespace polyembed {

enum class GenKind { Convex, PseudoConvex, OrthoconvexStaircase };

inline const char* gen_kind_name(GenKind k) {
  switch (k) {
    case GenKind::Convex: return "convex";
    case GenKind::PseudoConvex: return "pseudoconvex";
    case GenKind::OrthoconvexStaircase: return "ortho";
  }
  return "?";
}

struct GenConfig {
  GenKind kind = GenKind::Convex;
  int n = 0;
  std::uint64_t seed = 0;
  int reflex_target = 0;          // PseudoConvex only
  std::int64_t coordinate_span = 1'000'000;
};

// Unbiased uniform draw from [0, k) by rejection; mt19937_64 output is fully
// specified, so the whole pipeline is reproducible across platforms.
inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t k) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % k;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % k;
}

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// One batch of convex attempts on a shared RNG stream: n random angles on a
// circle of radius span/2, rounded to integers, accepted only when strictly
// convex and fully valid. The angles use 48-bit ticks so equal draws (and
// hence duplicate points) are vanishingly rare but still handled.
inline std::optional<std::vector<Point>> convex_attempt_batch(
    int n, std::mt19937_64& rng, std::int64_t span) {
  const double r = static_cast<double>(span / 2);
  constexpr std::uint64_t kTicks = 1ull << 48;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::uint64_t> ticks(static_cast<size_t>(n));
    for (auto& t : ticks) t = rand_below(rng, kTicks);
    std::sort(ticks.begin(), ticks.end());
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(n));
    for (std::uint64_t t : ticks) {
      const double a = 2.0 * std::numbers::pi * static_cast<double>(t) /
                       static_cast<double>(kTicks);
      pts.push_back(
          {std::llround(r * std::cos(a)), std::llround(r * std::sin(a))});
    }
    bool convex = true;
    for (int i = 0; i < n && convex; ++i) {
      convex = orientation(pts[static_cast<size_t>(i)],
                           pts[static_cast<size_t>((i + 1) % n)],
                           pts[static_cast<size_t>((i + 2) % n)]) ==
               Orientation::CCW;
    }
    if (!convex) continue;
    if (validate_polygon(pts).ok()) return pts;
  }
  return std::nullopt;
}

inline std::vector<int> reflex_of(const std::vector<Point>& pts) {
  std::vector<int> out;
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    if (orientation(pts[static_cast<size_t>((i + n - 1) % n)],
                    pts[static_cast<size_t>(i)],
                    pts[static_cast<size_t>((i + 1) % n)]) ==
        Orientation::CW) {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace detail

// Random convex polygon: sorted random angles on a circle, integer-rounded,
// rejection-resampled until strictly convex and valid.
inline Result<Polygon> gen_convex(const GenConfig& cfg) {
  if (cfg.n < 3) {
    return Result<Polygon>::failure(
        Errc::InvalidN, "convex generator needs n >= 3, got " +
                            std::to_string(cfg.n));
  }
  std::mt19937_64 rng(cfg.seed);
  auto pts = detail::convex_attempt_batch(cfg.n, rng, cfg.coordinate_span);
  if (!pts) {
    return Result<Polygon>::failure(
        Errc::GenerationFailed,
        "no valid convex polygon in 64 attempts (n=" + std::to_string(cfg.n) +
            ", seed=" + std::to_string(cfg.seed) + ")");
  }
  return validate_polygon(*pts);
}

// Random pseudo-convex polygon with exactly reflex_target reflex vertices:
// start from a fresh convex polygon, choose pairwise non-adjacent vertices,
// and pull each toward the centroid in growing integer steps until the
// classification shows precisely the intended reflex set with no two
// adjacent, re-validating simplicity at each step.
inline Result<Polygon> gen_pseudo_convex(const GenConfig& cfg) {
  const int n = cfg.n;
  if (n < 6) {
    return Result<Polygon>::failure(
        Errc::InvalidN, "pseudo-convex generator needs n >= 6, got " +
                            std::to_string(n));
  }
  if (cfg.reflex_target < 0 || cfg.reflex_target > n / 2 - 1) {
    return Result<Polygon>::failure(
        Errc::SizeOutOfRange,
        "reflex_target " + std::to_string(cfg.reflex_target) +
            " outside [0, " + std::to_string(n / 2 - 1) + "]");
  }
  const std::int64_t span = cfg.coordinate_span;
  std::mt19937_64 rng(cfg.seed);
  for (int outer = 0; outer < 16; ++outer) {
    auto base = detail::convex_attempt_batch(n, rng, span);
    if (!base) continue;

    std::vector<int> chosen;
    bool placed_all = true;
    for (int c = 0; c < cfg.reflex_target; ++c) {
      bool placed = false;
      for (int attempt = 0; attempt < 32; ++attempt) {
        const int v = static_cast<int>(
            rand_below(rng, static_cast<std::uint64_t>(n)));
        bool clash = false;
        for (int u : chosen) {
          if (v == u || (v - u + n) % n == 1 || (u - v + n) % n == 1) {
            clash = true;
            break;
          }
        }
        if (clash) continue;
        chosen.push_back(v);
        placed = true;
        break;
      }
      if (!placed) {
        placed_all = false;
        break;
      }
    }
    if (!placed_all) continue;
    std::sort(chosen.begin(), chosen.end());

    std::vector<Point> cur = *base;
    bool good = true;
    for (size_t ci = 0; ci < chosen.size() && good; ++ci) {
      const int v = chosen[ci];
      std::int64_t sx = 0, sy = 0;
      for (const Point& p : cur) {
        sx += p.x;
        sy += p.y;
      }
      const std::int64_t cx = detail::floor_div(sx, n);
      const std::int64_t cy = detail::floor_div(sy, n);
      const double dx = static_cast<double>(cx - cur[static_cast<size_t>(v)].x);
      const double dy = static_cast<double>(cy - cur[static_cast<size_t>(v)].y);
      const double dist = std::sqrt(dx * dx + dy * dy);
      if (dist < 1.0) {
        good = false;
        break;
      }
      std::vector<int> want(chosen.begin(),
                            chosen.begin() + static_cast<std::ptrdiff_t>(ci) +
                                1);
      bool placed = false;
      for (int i = 1; i <= 32; ++i) {
        const std::int64_t len = static_cast<std::int64_t>(i) * span / 64;
        if (static_cast<double>(len) >= dist) break;
        std::vector<Point> trial = cur;
        trial[static_cast<size_t>(v)] = {
            cur[static_cast<size_t>(v)].x +
                std::llround(dx * static_cast<double>(len) / dist),
            cur[static_cast<size_t>(v)].y +
                std::llround(dy * static_cast<double>(len) / dist)};
        if (!validate_polygon(trial).ok()) continue;
        const std::vector<int> rs = detail::reflex_of(trial);
        if (rs != want) continue;
        bool uturn = false;
        for (int a : rs) {
          for (int b : rs) {
            if ((a + 1) % n == b) {
              uturn = true;
              break;
            }
          }
          if (uturn) break;
        }
        if (uturn) continue;
        cur = std::move(trial);
        placed = true;
        break;
      }
      if (!placed) good = false;
    }
    if (good && detail::reflex_of(cur) == chosen) {
      auto out = validate_polygon(cur);
      if (out.ok()) return out;
    }
  }
  return Result<Polygon>::failure(
      Errc::GenerationFailed,
      "no pseudo-convex polygon in 16 attempts (n=" + std::to_string(n) +
          ", reflex_target=" + std::to_string(cfg.reflex_target) +
          ", seed=" + std::to_string(cfg.seed) + ")");
}

// Axis-parallel staircase: bottom and left edges plus (n-2)/2 steps of random
// integer width and height. Exactly (n-4)/2 inner corners are reflex, every
// horizontal or vertical line meets the interior in one segment, and no two
// reflex corners are adjacent.
inline Result<Polygon> gen_orthoconvex_staircase(const GenConfig& cfg) {
  const int n = cfg.n;
  if (n < 8 || n % 2 != 0) {
    return Result<Polygon>::failure(
        Errc::InvalidN, "staircase generator needs even n >= 8, got " +
                            std::to_string(n));
  }
  const int steps = (n - 2) / 2;
  std::mt19937_64 rng(cfg.seed);
  const std::int64_t max_step =
      std::max<std::int64_t>(1, cfg.coordinate_span / (2 * steps));
  std::vector<std::int64_t> widths(static_cast<size_t>(steps));
  std::vector<std::int64_t> heights(static_cast<size_t>(steps));
  for (auto& w : widths) {
    w = 1 + static_cast<std::int64_t>(
                rand_below(rng, static_cast<std::uint64_t>(max_step)));
  }
  for (auto& h : heights) {
    h = 1 + static_cast<std::int64_t>(
                rand_below(rng, static_cast<std::uint64_t>(max_step)));
  }
  std::int64_t total_w = 0;
  for (auto w : widths) total_w += w;
  std::vector<Point> pts;
  pts.push_back({0, 0});
  pts.push_back({total_w, 0});
  std::int64_t used_w = 0;
  std::int64_t used_h = 0;
  for (int i = 0; i < steps; ++i) {
    used_h += heights[static_cast<size_t>(i)];
    pts.push_back({total_w - used_w, used_h});
    used_w += widths[static_cast<size_t>(i)];
    pts.push_back({total_w - used_w, used_h});
  }
  return validate_polygon(pts);
}

inline Result<Polygon> generate(const GenConfig& cfg) {
  switch (cfg.kind) {
    case GenKind::Convex: return gen_convex(cfg);
    case GenKind::PseudoConvex: return gen_pseudo_convex(cfg);
    case GenKind::OrthoconvexStaircase: return gen_orthoconvex_staircase(cfg);
  }
  return Result<Polygon>::failure(Errc::ParseError, "unknown generator kind");
}

}  // namespace polyembed
