#pragma once

#include <utility>
#include <vector>

namespace bar1v {

// Directed multigraph with a combinatorial embedding. rotation[v] lists the
// incident arc ids around v in counterclockwise order. The outer face is the
// face on outer_side of outer_arc (Left = the face seen when walking the arc
// from orig to dest).
struct EmbeddedDigraph {
  enum class Side { Left, Right };

  int vertex_count = 0;
  std::vector<std::pair<int, int>> arcs; // orig -> dest
  std::vector<std::vector<int>> rotation;
  int outer_arc = 0;
  Side outer_side = Side::Left;

  int n() const { return vertex_count; }
  int m() const { return static_cast<int>(arcs.size()); }
};

// Plane st-graph: acyclic, single source s and single sink t on the outer
// face. Faces are numbered 0..face_count-1 with the outer face split into the
// left outer face s_star and right outer face t_star (the last two ids).
struct PlaneStGraph {
  EmbeddedDigraph emb;
  int s = -1;
  int t = -1;

  int face_count = 0;
  int s_star = -1;
  int t_star = -1;
  std::vector<int> left;  // per arc: face left of orig->dest
  std::vector<int> right; // per arc
  // Boundary walks, one per face, as half-edge ids (2*arc + dir, dir 1 =
  // against the arc). s_star/t_star hold the left/right boundary paths.
  std::vector<std::vector<int>> face_walk;

  // Fan faces per vertex: the faces separating the incoming block from the
  // outgoing block in rotation order; s and t use s_star/t_star.
  std::vector<int> left_of_vertex;
  std::vector<int> right_of_vertex;

  // rotation slot of each arc at its orig/dest endpoint
  std::vector<int> slot_at_orig;
  std::vector<int> slot_at_dest;

  int n() const { return emb.vertex_count; }
  int m() const { return emb.m(); }
};

// Validates and assembles a PlaneStGraph. Throws Error with code NotAcyclic,
// MultipleSourcesOrSinks, StNotOnOuterFace or EmbeddingInconsistent.
PlaneStGraph build_plane_st_graph(const EmbeddedDigraph& emb, int s, int t);

// Dual st-graph: one vertex per face, one arc left(e) -> right(e) per primal
// arc e other than direct (s,t) arcs. Unit weights by default.
struct DualStGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> weights;
  int s_star = -1;
  int t_star = -1;
  std::vector<int> dual_arc_of_primal; // -1 for skipped (s,t) arcs
};

DualStGraph dual_of(const PlaneStGraph& g);

} // namespace bar1v
