#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <vector>

#include "polyembed/generators.hpp"
#include "polyembed/report.hpp"

using namespace polyembed;

namespace {

GenConfig cfg(GenKind k, int n, std::uint64_t seed, int rt = 0) {
  GenConfig c;
  c.kind = k;
  c.n = n;
  c.seed = seed;
  c.reflex_target = rt;
  return c;
}

}  // namespace

// The exact vertex lists below pin the generators to their current output;
// any change to the sampling scheme shows up as a diff here, not as silently
// different corpora downstream.
TEST_CASE("convex generator: frozen samples") {
  const auto a = gen_convex(cfg(GenKind::Convex, 6, 7));
  REQUIRE(a.ok());
  CHECK(a.value().vertices ==
        std::vector<Point>{{-349456, 357604},
                           {-395641, 305726},
                           {-411111, 284584},
                           {-441070, 235493},
                           {-429994, -255158},
                           {324298, -380566}});
  CHECK(is_convex(a.value()));

  const auto b = gen_convex(cfg(GenKind::Convex, 3, 1));
  REQUIRE(b.ok());
  CHECK(b.value().vertices == std::vector<Point>{{-450339, -217244},
                                                 {-32204, -498962},
                                                 {212714, -452496}});

  const auto c = gen_convex(cfg(GenKind::Convex, 4, 1));
  REQUIRE(c.ok());
  CHECK(c.value().vertices == std::vector<Point>{{-450339, -217244},
                                                 {-32204, -498962},
                                                 {212714, -452496},
                                                 {278003, -415589}});
}

TEST_CASE("pseudo-convex generator: frozen samples with exact reflex sets") {
  const auto a = gen_pseudo_convex(cfg(GenKind::PseudoConvex, 8, 3, 2));
  REQUIRE(a.ok());
  CHECK(a.value().vertices ==
        std::vector<Point>{{492197, 87991},
                           {473576, 160392},
                           {-38995, 435807},
                           {-117932, 485893},
                           {-249282, 433427},
                           {-447718, -222595},
                           {-289948, -307215},
                           {52795, -497205}});
  CHECK(reflex_vertices(a.value()) == std::vector<int>{2, 6});
  CHECK(is_pseudo_convex(a.value()));
  CHECK_FALSE(is_convex(a.value()));

  // A zero reflex target yields a convex polygon from the same seed family.
  const auto b = gen_pseudo_convex(cfg(GenKind::PseudoConvex, 8, 3, 0));
  REQUIRE(b.ok());
  CHECK(b.value().vertices ==
        std::vector<Point>{{492197, 87991},
                           {473576, 160392},
                           {-41953, 498237},
                           {-117932, 485893},
                           {-249282, 433427},
                           {-447718, -222595},
                           {-335729, -370521},
                           {52795, -497205}});
  CHECK(reflex_vertices(b.value()).empty());
  CHECK(is_convex(b.value()));

  const auto c = gen_pseudo_convex(cfg(GenKind::PseudoConvex, 10, 9, 4));
  REQUIRE(c.ok());
  CHECK(c.value().vertices ==
        std::vector<Point>{{4638, 499978},
                           {-64344, 495843},
                           {-111370, 423899},
                           {-499780, -14834},
                           {-442386, -233013},
                           {-331739, -331199},
                           {-246743, -434877},
                           {135901, -384536},
                           {333017, -372961},
                           {200555, -45495}});
  CHECK(reflex_vertices(c.value()) == std::vector<int>{2, 5, 7, 9});
}

TEST_CASE("staircase generator: frozen samples") {
  const auto a =
      gen_orthoconvex_staircase(cfg(GenKind::OrthoconvexStaircase, 8, 0));
  REQUIRE(a.ok());
  CHECK(a.value().vertices == std::vector<Point>{{0, 0},
                                                 {223415, 0},
                                                 {223415, 52493},
                                                 {113100, 52493},
                                                 {113100, 172894},
                                                 {19954, 172894},
                                                 {19954, 320009},
                                                 {0, 320009}});
  CHECK(reflex_vertices(a.value()) == std::vector<int>{3, 5});

  const auto b =
      gen_orthoconvex_staircase(cfg(GenKind::OrthoconvexStaircase, 12, 5));
  REQUIRE(b.ok());
  CHECK(reflex_vertices(b.value()) == std::vector<int>{3, 5, 7, 9});
}

TEST_CASE("generated polygons satisfy their advertised class") {
  for (int n : {3, 4, 5, 8, 13, 21, 40}) {
    for (std::uint64_t seed : {0ull, 1ull, 42ull}) {
      const auto P = gen_convex(cfg(GenKind::Convex, n, seed));
      CAPTURE(n, seed);
      REQUIRE(P.ok());
      CHECK(P.value().n() == n);
      CHECK(is_convex(P.value()));
      for (const Point& p : P.value().vertices) {
        CHECK(std::abs(p.x) <= 1'000'000);
        CHECK(std::abs(p.y) <= 1'000'000);
      }
    }
  }
  for (int n : {6, 9, 14, 25}) {
    for (int rt = 0; rt <= n / 2 - 1; rt += 2) {
      const auto P = gen_pseudo_convex(cfg(GenKind::PseudoConvex, n, 5, rt));
      CAPTURE(n, rt);
      REQUIRE(P.ok());
      CHECK(static_cast<int>(reflex_vertices(P.value()).size()) == rt);
      CHECK(is_pseudo_convex(P.value()));
      CHECK(u_turn_vertices(P.value()).empty());
    }
  }
  for (int n : {8, 10, 16, 30}) {
    const auto P =
        gen_orthoconvex_staircase(cfg(GenKind::OrthoconvexStaircase, n, 9));
    CAPTURE(n);
    REQUIRE(P.ok());
    CHECK(static_cast<int>(reflex_vertices(P.value()).size()) == (n - 4) / 2);
    CHECK(is_pseudo_convex(P.value()));
    for (int i = 0; i < P.value().n(); ++i) {
      const auto [a, b] = P.value().edge(i);
      const bool axis_parallel = a.x == b.x || a.y == b.y;
      CHECK(axis_parallel);
    }
  }
}

TEST_CASE("generation is deterministic in the seed") {
  for (GenKind k : {GenKind::Convex, GenKind::PseudoConvex,
                    GenKind::OrthoconvexStaircase}) {
    const int n = k == GenKind::OrthoconvexStaircase ? 10 : 9;
    const int rt = k == GenKind::PseudoConvex ? 3 : 0;
    const auto a = generate(cfg(k, n, 77, rt));
    const auto b = generate(cfg(k, n, 77, rt));
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    CHECK(a.value().vertices == b.value().vertices);
    const auto c = generate(cfg(k, n, 78, rt));
    REQUIRE(c.ok());
    CHECK(a.value().vertices != c.value().vertices);
  }
}

TEST_CASE("generator input validation") {
  CHECK(gen_convex(cfg(GenKind::Convex, 2, 0)).error().code == Errc::InvalidN);
  CHECK(gen_pseudo_convex(cfg(GenKind::PseudoConvex, 5, 0, 1)).error().code ==
        Errc::InvalidN);
  CHECK(gen_pseudo_convex(cfg(GenKind::PseudoConvex, 8, 0, 4)).error().code ==
        Errc::SizeOutOfRange);
  CHECK(gen_pseudo_convex(cfg(GenKind::PseudoConvex, 8, 0, -1)).error().code ==
        Errc::SizeOutOfRange);
  CHECK(gen_orthoconvex_staircase(cfg(GenKind::OrthoconvexStaircase, 9, 0))
            .error()
            .code == Errc::InvalidN);
  CHECK(gen_orthoconvex_staircase(cfg(GenKind::OrthoconvexStaircase, 6, 0))
            .error()
            .code == Errc::InvalidN);
}

TEST_CASE("generate dispatches on the configured kind") {
  const auto direct = gen_pseudo_convex(cfg(GenKind::PseudoConvex, 8, 3, 2));
  const auto routed = generate(cfg(GenKind::PseudoConvex, 8, 3, 2));
  REQUIRE(routed.ok());
  CHECK(routed.value().vertices == direct.value().vertices);
}

TEST_CASE("bounded sampling is unbiased and deterministic") {
  std::mt19937_64 a(123), b(123);
  for (int i = 0; i < 100; ++i) {
    CHECK(rand_below(a, 1000) == rand_below(b, 1000));
  }
  std::mt19937_64 rng(7);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t v = rand_below(rng, 3);
    CHECK(v < 3);
    seen.insert(v);
  }
  CHECK(seen == std::set<std::uint64_t>{0, 1, 2});
  CHECK(rand_below(rng, 1) == 0);
}

TEST_CASE("config comments round through unchanged") {
  CHECK(gen_comment(cfg(GenKind::Convex, 6, 7)) ==
        "kind=convex n=6 seed=7 reflex_target=0 span=1000000");
  CHECK(gen_comment(cfg(GenKind::OrthoconvexStaircase, 12, 5)) ==
        "kind=ortho n=12 seed=5 reflex_target=0 span=1000000");
  CHECK(gen_kind_name(GenKind::PseudoConvex) == std::string("pseudoconvex"));
}
