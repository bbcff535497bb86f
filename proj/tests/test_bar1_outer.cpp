#include <doctest.h>

#include <set>

#include "bar1v/bar1.hpp"
#include "bar1v/checker.hpp"
#include "bar1v/error.hpp"
#include "bar1v/generators.hpp"
#include "fixtures.hpp"

using namespace bar1v;

namespace {

void check_quadrangle_property(const Graph1Planar& g, const DiagonalLabeling& lab) {
  for (const auto& [e1, e2] : g.crossing_pairs) {
    const auto [a, c] = g.edges[e1];
    const auto [b, d] = g.edges[e2];
    int lo = a, hi = a;
    for (int v : {a, c, b, d}) {
      if (lab.label[v] < lab.label[lo]) lo = v;
      if (lab.label[v] > lab.label[hi]) hi = v;
    }
    const bool on_e1 = std::set<int>{a, c} == std::set<int>{lo, hi};
    const bool on_e2 = std::set<int>{b, d} == std::set<int>{lo, hi};
    CHECK(on_e1 != on_e2); // exactly one diagonal spans min and max
  }
}

} // namespace

TEST_CASE("labeling of a single quadrangle") {
  const Graph1Planar g = gen_quadrangle_chain(1); // T0=0 T1=1 B0=2 B1=3
  const DiagonalLabeling lab = diagonal_labeling(g);
  // start corner 1, hull neighbors 2 and 3 counterclockwise, diagonal mate 4
  CHECK(lab.label[0] == 1);
  CHECK(lab.label[2] == 2);
  CHECK(lab.label[1] == 3);
  CHECK(lab.label[3] == 4);
  const int diag = g.edge_index(0, 3);
  REQUIRE(diag >= 0);
  check_quadrangle_property(g, lab);
}

TEST_CASE("labeling property holds on chains") {
  for (int k = 1; k <= 12; ++k) {
    const Graph1Planar g = gen_quadrangle_chain(k);
    check_quadrangle_property(g, diagonal_labeling(g));
  }
}

TEST_CASE("missing outer order is rejected") {
  Graph1Planar g = gen_quadrangle_chain(2);
  g.outer_order.reset();
  try {
    diagonal_labeling(g);
    FAIL("expected NotOuter1Plane");
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotOuter1Plane);
  }
}

TEST_CASE("single quadrangle drawing crosses one of the side corners") {
  const Graph1Planar g = gen_quadrangle_chain(1);
  const BarDrawing d = draw_maximal_outer(g);
  const ValidationReport rep = validate(g, d, 1);
  CHECK(rep.pass);
  const DiagonalLabeling lab = diagonal_labeling(g);
  const int main_diag = g.edge_index(0, 3); // labels 1 and 4
  for (int e = 0; e < g.m(); ++e) {
    if (e == main_diag) {
      REQUIRE(rep.crossing_count[e] == 1);
      const int crossed = rep.crossed_bars[e][0];
      const int lv = lab.label[crossed];
      CHECK((lv == 2 || lv == 3));
    } else {
      CHECK(rep.crossing_count[e] == 0);
    }
  }
}

TEST_CASE("chain drawings validate with one crossing per quadrangle") {
  for (int k = 1; k <= 8; ++k) {
    const Graph1Planar g = gen_quadrangle_chain(k);
    const BarDrawing d = draw_maximal_outer(g);
    const ValidationReport rep = validate(g, d, 1);
    CHECK(rep.pass);
    int count1 = 0;
    for (int c : rep.crossing_count) count1 += c == 1 ? 1 : 0;
    CHECK(count1 == k);
    // and each crosser is the min/max diagonal of its quadrangle
    const OuterPlanarization pl = planarize_maximal_outer(g);
    for (int pi = 0; pi < static_cast<int>(g.crossing_pairs.size()); ++pi)
      CHECK(rep.crossing_count[pl.main_edge_of_pair[pi]] == 1);
  }
}

TEST_CASE("pipeline stages of a two-quadrangle chain") {
  const Graph1Planar g = gen_quadrangle_chain(2);
  const OuterPlanarization pl = planarize_maximal_outer(g);
  // two rerouted diagonals, two constraint paths, rerouted edges removed
  CHECK(pl.paths.size() == 2);
  int rerouted = 0;
  for (int e = 0; e < g.m(); ++e) rerouted += pl.arc_of_edge[e] < 0 ? 1 : 0;
  CHECK(rerouted == 2);
  // chain labelings leave a single sink, so no dummies here
  CHECK(pl.dummy_arcs.empty());
  CHECK(pl.st.m() == (g.m() - 2) + 4);
}

TEST_CASE("branching chain needs a dummy edge and still draws") {
  const Graph1Planar g = fixtures::bent_chain();
  CHECK_NOTHROW(check_outer_structure(g));
  const DiagonalLabeling lab = diagonal_labeling(g);
  check_quadrangle_property(g, lab);

  const OuterPlanarization pl = planarize_maximal_outer(g);
  CHECK(pl.dummy_arcs.size() == 1); // the second sink ties to the top label

  const BarDrawing d = draw_maximal_outer(g);
  const ValidationReport rep = validate(g, d, 1);
  CHECK(rep.pass);
  int count1 = 0;
  for (int c : rep.crossing_count) count1 += c == 1 ? 1 : 0;
  CHECK(count1 == 3);
}

TEST_CASE("mirrored branching chain routes its dummy the other way around") {
  const bar1v::Graph1Planar g = fixtures::bent_chain_mirrored();
  const DiagonalLabeling lab = diagonal_labeling(g);
  check_quadrangle_property(g, lab);
  const OuterPlanarization pl = planarize_maximal_outer(g);
  CHECK(pl.dummy_arcs.size() == 1);
  const BarDrawing d = draw_maximal_outer(g);
  const ValidationReport rep = validate(g, d, 1);
  CHECK(rep.pass);
  int count1 = 0;
  for (int c : rep.crossing_count) count1 += c == 1 ? 1 : 0;
  CHECK(count1 == 3);
}

TEST_CASE("drawing bijections") {
  const Graph1Planar g = gen_quadrangle_chain(5);
  const BarDrawing d = draw_maximal_outer(g);
  CHECK(static_cast<int>(d.bars.size()) == g.n());
  CHECK(static_cast<int>(d.segments.size()) == g.m());
}

TEST_CASE("conforming inputs beyond the chain shape") {
  // plain outer cycle, no crossings at all
  Graph1Planar square;
  square.vertex_count = 4;
  square.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  square.outer_order = std::vector<int>{0, 1, 2, 3};
  const ValidationReport sq = validate(square, draw_maximal_outer(square), 1);
  CHECK(sq.pass);
  CHECK(sq.max_crossing() == 0);

  // hexagon ring with one crossed quadrangle inside
  Graph1Planar hex;
  hex.vertex_count = 6;
  hex.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 4}, {1, 3}, {2, 4}};
  hex.crossing_pairs = {{7, 8}};
  hex.outer_order = std::vector<int>{0, 1, 2, 3, 4, 5};
  const ValidationReport hx = validate(hex, draw_maximal_outer(hex), 1);
  CHECK(hx.pass);
  int count1 = 0;
  for (int c : hx.crossing_count) count1 += c == 1 ? 1 : 0;
  CHECK(count1 == 1);
}
