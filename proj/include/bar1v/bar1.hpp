#pragma once

#include "bar1v/drawing.hpp"
#include "bar1v/generators.hpp"
#include "bar1v/graph.hpp"
#include "bar1v/visibility.hpp"

namespace bar1v {

// Bijection vertices -> 1..n such that in every quadrangle the endpoints of
// exactly one diagonal hold the minimum and maximum of the four labels.
struct DiagonalLabeling {
  std::vector<int> label; // per vertex, values 1..n
};

// Structural check for conforming outer-1-plane inputs: outer_order present
// and a permutation, consecutive outer vertices adjacent (the hull cycle),
// and every crossing pair surrounded by a 4-cycle of non-crossing edges.
// Throws Error(NotOuter1Plane) otherwise.
void check_outer_structure(const Graph1Planar& g);

// Labels vertices starting from the lowest-index outer vertex: repeatedly,
// from the lowest-labeled unprocessed vertex, the unlabeled neighbors across
// non-crossing edges get the next labels in counterclockwise order, then the
// unlabeled neighbors across crossing edges. The quadrangle min/max property
// is verified on the result (Error(LabelingPropertyViolated) if it fails).
DiagonalLabeling diagonal_labeling(const Graph1Planar& g);

// Intermediate product of the maximal-outer pipeline, exposed for tests and
// for inspecting the constrained-visibility stage.
struct OuterPlanarization {
  PlaneStGraph st;
  ConstraintPaths paths;              // one 2-arc path per quadrangle
  std::vector<int> arc_of_edge;       // per input edge; -1 for rerouted diagonals
  std::vector<int> path_of_pair;      // per crossing pair: index into paths
  std::vector<int> reroute_vertex;    // per crossing pair
  std::vector<int> main_edge_of_pair; // per crossing pair: rerouted edge index
  std::vector<int> dummy_arcs;
  DiagonalLabeling labeling;
};

OuterPlanarization planarize_maximal_outer(const Graph1Planar& g);

// The plane st-graph of the diagonal-grid pipeline: left diagonals removed,
// edges directed upward by the row numbering Y, plus apex vertices s and t.
struct GridStGraph {
  PlaneStGraph st;
  Numbering y;                  // on the st-graph's vertices
  std::vector<int> arc_of_edge; // per grid edge; -1 for left diagonals
  std::vector<int> diagonal_arcs;
  int s = -1;
  int t = -1;
};

GridStGraph grid_st_graph(DiagonalGridParams params);

// Drawing algorithms. Each returns a normalized BarDrawing whose segments are
// indexed like the generator's edge list, and each output passes the checker
// at k = 1.
BarDrawing draw_diagonal_grid(DiagonalGridParams params);
BarDrawing draw_maximal_outer(const Graph1Planar& g);
BarDrawing draw_recursive_quadrangle(RecursiveQuadrangleParams params);
BarDrawing draw_pdw_even(int n);
BarDrawing draw_pdw_odd(int n);

} // namespace bar1v
