#include <doctest.h>

#include "bar1v/bar1.hpp"
#include "bar1v/checker.hpp"
#include "bar1v/generators.hpp"

using namespace bar1v;

namespace {

Graph1Planar path2() {
  Graph1Planar g;
  g.vertex_count = 2;
  g.edges = {{0, 1}};
  return g;
}

BarDrawing two_bars() {
  BarDrawing d;
  d.bars = {{0, 0, 0, 2}, {1, 1, 0, 2}};
  d.segments = {{0, 1, 1, 0, 1}};
  return d;
}

} // namespace

TEST_CASE("two bars and one segment pass at k=0") {
  const ValidationReport rep = validate(path2(), two_bars(), 0);
  CHECK(rep.pass);
  CHECK(rep.crossing_count == std::vector<int>{0});
}

TEST_CASE("a segment through a middle bar separates k=0 from k=1") {
  Graph1Planar g;
  g.vertex_count = 3;
  g.edges = {{0, 2}};
  BarDrawing d;
  d.bars = {{0, 0, 0, 2}, {1, 1, 0, 2}, {2, 2, 0, 2}};
  d.segments = {{0, 2, 1, 0, 2}};
  CHECK(validate(g, d, 1).pass);
  CHECK_FALSE(validate(g, d, 0).pass);
  CHECK(validate(g, d, 0).violations.empty()); // only the crossing budget fails
}

TEST_CASE("pass at k implies pass at k+1") {
  const Graph1Planar g = gen_diagonal_grid({3, 3});
  const BarDrawing d = draw_diagonal_grid({3, 3});
  for (int k = 1; k <= 4; ++k) {
    if (validate(g, d, k).pass) CHECK(validate(g, d, k + 1).pass);
  }
}

TEST_CASE("3x3 grid drawing has one crossing per cell") {
  const Graph1Planar g = gen_diagonal_grid({3, 3});
  const ValidationReport rep = validate(g, draw_diagonal_grid({3, 3}), 1);
  CHECK(rep.pass);
  int count1 = 0;
  for (int c : rep.crossing_count) count1 += c == 1 ? 1 : 0;
  CHECK(count1 == 4);
}

TEST_CASE("edge bound report") {
  const Graph1Planar pdw = gen_pseudo_double_wheel_even(3);
  const EdgeBounds b = edge_bound_report(pdw);
  CHECK(b.m == 4 * b.n - 8);
  CHECK(b.optimal_1planar);
  CHECK(b.within_1planar);
  CHECK(b.within_bar1visible); // 24 <= 28
  CHECK_FALSE(b.within_rac);   // 24 > 22

  const EdgeBounds rq = edge_bound_report(gen_recursive_quadrangle({0, false}));
  CHECK(rq.m == 4 * rq.n - 10);
  CHECK(rq.within_rac);

  Graph1Planar k4;
  k4.vertex_count = 4;
  k4.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  const EdgeBounds kb = edge_bound_report(k4);
  CHECK(kb.within_1planar);          // 6 <= 8
  CHECK_FALSE(kb.applies_bar1visible); // below the n >= 5 threshold
}

TEST_CASE("validator is total on corrupted drawings") {
  const Graph1Planar g = gen_diagonal_grid({2, 2});
  const BarDrawing good = draw_diagonal_grid({2, 2});

  SUBCASE("segment moved off its bar") {
    BarDrawing bad = good;
    bad.segments[0].x = good.max_x() + 10;
    const ValidationReport rep = validate(g, bad, 1);
    CHECK_FALSE(rep.pass);
    bool seen = false;
    for (const auto& v : rep.violations) seen = seen || v.kind == ViolationKind::SegmentOffBar;
    CHECK(seen);
  }
  SUBCASE("missing bar") {
    BarDrawing bad = good;
    bad.bars.pop_back();
    const ValidationReport rep = validate(g, bad, 1);
    CHECK_FALSE(rep.pass);
    bool seen = false;
    for (const auto& v : rep.violations) seen = seen || v.kind == ViolationKind::MissingBar;
    CHECK(seen);
  }
  SUBCASE("wrong endpoints") {
    BarDrawing bad = good;
    std::swap(bad.segments[0].u, bad.segments[1].u);
    CHECK_FALSE(validate(g, bad, 1).pass);
  }
  SUBCASE("overlapping bars") {
    BarDrawing bad = good;
    bad.bars[1].y = bad.bars[0].y;
    const ValidationReport rep = validate(g, bad, 5);
    CHECK_FALSE(rep.pass);
    bool seen = false;
    for (const auto& v : rep.violations) seen = seen || v.kind == ViolationKind::BarOverlap;
    CHECK(seen);
  }
  SUBCASE("overlapping segments") {
    Graph1Planar gg;
    gg.vertex_count = 4;
    gg.edges = {{0, 3}, {1, 2}};
    BarDrawing d;
    d.bars = {{0, 0, 0, 4}, {1, 1, 0, 4}, {2, 2, 0, 4}, {3, 3, 0, 4}};
    d.segments = {{0, 3, 2, 0, 3}, {1, 2, 2, 1, 2}};
    const ValidationReport rep = validate(gg, d, 5);
    bool seen = false;
    for (const auto& v : rep.violations) seen = seen || v.kind == ViolationKind::SegmentOverlap;
    CHECK(seen);
  }
}

TEST_CASE("brute force crossings on tiny drawings") {
  CHECK(brute_force_crossings(BarDrawing{}).empty());
  BarDrawing one_bar;
  one_bar.bars = {{0, 0, 0, 3}};
  CHECK(brute_force_crossings(one_bar).empty());
  CHECK(brute_force_crossings(two_bars()) == std::vector<int>{0});
}

TEST_CASE("brute force agrees with the validator") {
  const Graph1Planar g = gen_pseudo_double_wheel_odd(4);
  const BarDrawing d = draw_pdw_odd(4);
  const ValidationReport rep = validate(g, d, 1);
  CHECK(rep.crossing_count == brute_force_crossings(d));
}

TEST_CASE("degenerate bars can still be crossed") {
  Graph1Planar g;
  g.vertex_count = 3;
  g.edges = {{0, 2}};
  BarDrawing d;
  d.bars = {{0, 0, 1, 1}, {1, 1, 1, 1}, {2, 2, 1, 1}};
  d.segments = {{0, 2, 1, 0, 2}};
  const ValidationReport rep = validate(g, d, 1);
  CHECK(rep.pass);
  CHECK(rep.crossing_count == std::vector<int>{1});
}
