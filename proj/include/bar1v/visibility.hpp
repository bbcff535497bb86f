#pragma once

#include <optional>
#include <vector>

#include "bar1v/drawing.hpp"
#include "bar1v/numbering.hpp"
#include "bar1v/plane_st_graph.hpp"

namespace bar1v {

// A directed path given as a sequence of arc ids with dest(a_i) == orig(a_i+1).
using ConstraintPath = std::vector<int>;
using ConstraintPaths = std::vector<ConstraintPath>;

// Classic visibility drawing of a plane st-graph: bar(v) spans
// [X(left(v)), X(right(v))-1] at height Y(v), segment(e) sits at X(left(e)),
// where X is the optimal unit-weight numbering of the dual. If y_numbering is
// given it must satisfy Y(dest) >= Y(orig)+1 on every arc
// (Error(InvalidNumbering) otherwise). The result has zero crossings.
BarDrawing visibility_drawing(const PlaneStGraph& g,
                              const std::optional<Numbering>& y_numbering = {});

// Visibility drawing in which the segments of every constraint path share a
// single x-coordinate. Paths must be pairwise non-intersecting
// (Error(PathsIntersect) otherwise). With no paths the output coincides with
// visibility_drawing.
BarDrawing constrained_visibility_drawing(const PlaneStGraph& g,
                                          const ConstraintPaths& paths);

// true iff the paths are edge disjoint and no two of them interleave in
// rotation order at a shared vertex (touching is allowed).
// Throws Error(UnknownEdge) for arc ids out of range and
// Error(InvalidParams) for sequences that are not directed paths.
bool check_nonintersecting(const PlaneStGraph& g, const ConstraintPaths& paths);

} // namespace bar1v
