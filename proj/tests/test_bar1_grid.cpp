#include <doctest.h>

#include "bar1v/bar1.hpp"
#include "bar1v/checker.hpp"
#include "bar1v/error.hpp"
#include "bar1v/generators.hpp"

using namespace bar1v;

namespace {

// grid edge indices of the right diagonals, in generator order
std::vector<int> right_diagonal_edges(int p, int q) {
  std::vector<int> out;
  const int base = p * (q - 1) + q * (p - 1);
  for (int c = 0; c < (p - 1) * (q - 1); ++c) out.push_back(base + 2 * c);
  return out;
}

} // namespace

TEST_CASE("2x2 diagonal grid is a bar 1-visible K4") {
  const Graph1Planar g = gen_diagonal_grid({2, 2});
  const BarDrawing d = draw_diagonal_grid({2, 2});
  const ValidationReport rep = validate(g, d, 1);
  CHECK(rep.pass);
  CHECK(rep.violations.empty());
  CHECK(d.height() <= 2 + 2 * 2 - 2);
  CHECK(d.width() <= 3 * (2 + 2) - 3);
  // the single cell's right diagonal is the only crossing segment
  int crossers = 0;
  for (int c : rep.crossing_count) crossers += c;
  CHECK(crossers == 1);
}

TEST_CASE("3x3 diagonal grid crossing census") {
  const Graph1Planar g = gen_diagonal_grid({3, 3});
  const BarDrawing d = draw_diagonal_grid({3, 3});
  const ValidationReport rep = validate(g, d, 1);
  CHECK(rep.pass);
  const std::vector<int> rd = right_diagonal_edges(3, 3);
  for (int e = 0; e < g.m(); ++e) {
    const bool is_rd = std::find(rd.begin(), rd.end(), e) != rd.end();
    CHECK(rep.crossing_count[e] == (is_rd ? 1 : 0));
  }
  CHECK(d.height() <= 7);
  CHECK(d.width() <= 15);
}

TEST_CASE("each right diagonal crosses exactly the up-left bar") {
  const int p = 3, q = 4;
  const Graph1Planar g = gen_diagonal_grid({p, q});
  const BarDrawing d = draw_diagonal_grid({p, q});
  const ValidationReport rep = validate(g, d, 1);
  REQUIRE(rep.pass);
  int cell = 0;
  for (int i = 1; i < p; ++i)
    for (int j = 1; j < q; ++j) {
      const int e = right_diagonal_edges(p, q)[cell++];
      REQUIRE(rep.crossed_bars[e].size() == 1);
      CHECK(rep.crossed_bars[e][0] == i * q + (j - 1)); // vertex (i+1, j)
    }
}

TEST_CASE("flat grids meet the stated height") {
  const BarDrawing d = draw_diagonal_grid({2, 5});
  const ValidationReport rep = validate(gen_diagonal_grid({2, 5}), d, 1);
  CHECK(rep.pass);
  CHECK(d.height() == 5 + 2 * 2 - 2);
  CHECK(d.width() <= 3 * 7 - 3);
}

TEST_CASE("grid parameters are validated") {
  CHECK_THROWS_AS(draw_diagonal_grid({1, 5}), Error);
  CHECK_THROWS_AS(draw_diagonal_grid({5, 1}), Error);
}

TEST_CASE("grid drawing is compact") {
  for (auto [p, q] : {std::pair{2, 2}, {3, 3}, {4, 2}, {2, 6}}) {
    const BarDrawing d = draw_diagonal_grid({p, q});
    std::vector<bool> row(d.height(), false);
    std::vector<bool> col(d.width(), false);
    for (const Bar& b : d.bars) {
      row[b.y] = true;
      col[b.x0] = true;
      col[b.x1] = true;
    }
    for (const Segment& s : d.segments) col[s.x] = true;
    for (bool r : row) CHECK(r);
    for (int x = 0; x + 1 < d.width(); ++x) CHECK(col[x]);
  }
}
