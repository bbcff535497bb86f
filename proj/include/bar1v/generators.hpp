#pragma once

#include "bar1v/graph.hpp"

namespace bar1v {

struct DiagonalGridParams {
  int p = 2; // rows
  int q = 2; // columns
};

struct RecursiveQuadrangleParams {
  int depth = 0;        // recursion index i >= 0
  bool optimal = false; // add the two extra edges of the optimal variant
};

struct PseudoDoubleWheelParams {
  enum class Parity { Even, Odd };
  int n = 3; // half-cycle length
  Parity parity = Parity::Even;
};

// p x q grid with both diagonals in every cell; the two diagonals of a cell
// form a crossing pair. Vertex (row i, col j), 1-based with row 1 at the
// bottom, has id (i-1)*q + (j-1).
// Edge order: horizontals row-major, then verticals row-major, then per cell
// (row-major) the right-diagonal followed by the left-diagonal.
Graph1Planar gen_diagonal_grid(DiagonalGridParams params);

// Nested rectangles: ring r uses ids 4r..4r+3 for corners a,b,c,d. The inner
// ring is a K4 (rectangle + crossing diagonals); every further ring adds the
// rectangle, four radials and eight ring-crossing edges (16 edges, four
// crossing pairs). depth i yields rings 0..i+1, n = 8+4i, m = 4n-10; the
// optimal variant appends the outermost rectangle's two diagonals (m = 4n-8).
Graph1Planar gen_recursive_quadrangle(RecursiveQuadrangleParams params);

// Cycle v_1 u_1 v_2 u_2 ... v_n u_n plus outer hub x adjacent to every u_i and
// inner hub y adjacent to every v_i, with one crossing pair added in each of
// the 2n quadrangular faces. N = 2n+2, m = 8n = 4N-8.
// Ids: v_i = 2(i-1), u_i = 2i-1, x = 2n, y = 2n+1.
Graph1Planar gen_pseudo_double_wheel_even(int n);

// Q_v splitting at v1: picks the first pair v2, v3 of v1's neighbors in
// rotation order with no edge between them, splits v1 into v1 and a new
// vertex v4, keeps the neighbors on the rotation arc from v2 to v3 with v1
// and moves the rest to v4, and adds edges (v1,v4), (v2,v3), (v4,v2), (v4,v3)
// with ((v1,v4),(v2,v3)) as a new crossing pair. The input must be an even
// pseudo double wheel; throws Error(NoValidSplitPair) when every neighbor
// pair of v1 is adjacent.
Graph1Planar qv_split(const Graph1Planar& g, int v1);

// Even wheel split at the inner hub y; the new vertex is labeled z.
// N = 2n+3, m = 4N-8.
Graph1Planar gen_pseudo_double_wheel_odd(int n);

Graph1Planar gen_pseudo_double_wheel(PseudoDoubleWheelParams params);

// k quadrangles chained on shared sides, each carrying both diagonals as a
// crossing pair; all vertices on the outer face (outer_order populated).
// Top row T_0..T_k has ids 0..k, bottom row B_0..B_k ids k+1..2k+1.
Graph1Planar gen_quadrangle_chain(int k);

} // namespace bar1v
