#pragma once

#include <vector>

#include "bar1v/bar1.hpp"
#include "bar1v/generators.hpp"
#include "bar1v/graph.hpp"
#include "bar1v/plane_st_graph.hpp"

namespace fixtures {

// s -> t, one arc, the smallest st-graph.
inline bar1v::EmbeddedDigraph single_arc() {
  bar1v::EmbeddedDigraph emb;
  emb.vertex_count = 2;
  emb.arcs = {{0, 1}};
  emb.rotation = {{0}, {0}};
  emb.outer_arc = 0;
  emb.outer_side = bar1v::EmbeddedDigraph::Side::Left;
  return emb;
}

// Diamond: s=0 -> {a=1 left, b=2 right} -> t=3.
inline bar1v::EmbeddedDigraph diamond() {
  bar1v::EmbeddedDigraph emb;
  emb.vertex_count = 4;
  emb.arcs = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  emb.rotation = {{1, 0}, {2, 0}, {3, 1}, {2, 3}};
  emb.outer_arc = 0;
  emb.outer_side = bar1v::EmbeddedDigraph::Side::Left;
  return emb;
}

// Degree-4 middle vertex m with in-arcs from a,b and out-arcs to c,d;
// the paths a->m->c and b->m->d interleave around m.
//   s=0, a=1, b=2, m=3, c=4, d=5, t=6
//   arcs: 0 (s,a) 1 (s,b) 2 (a,m) 3 (b,m) 4 (m,c) 5 (m,d) 6 (c,t) 7 (d,t)
inline bar1v::EmbeddedDigraph cross_gadget() {
  bar1v::EmbeddedDigraph emb;
  emb.vertex_count = 7;
  emb.arcs = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}};
  emb.rotation = {
      {1, 0},       // s: b then a counterclockwise
      {2, 0},       // a
      {3, 1},       // b
      {4, 5, 2, 3}, // m: out c,d then in a,b
      {6, 4},       // c
      {7, 5},       // d
      {6, 7},       // t
  };
  emb.outer_arc = 0;
  emb.outer_side = bar1v::EmbeddedDigraph::Side::Left;
  return emb;
}

// Three quadrangles around a central one: q1 hangs off side (b,c) of q0 and
// q2 off side (c,d). Its diagonal labeling leaves two sinks, so the
// maximal-outer pipeline has to add a dummy edge.
//   ids: a=0 b=1 e=2 f=3 c=4 g=5 h=6 d=7, hull in this order.
inline bar1v::Graph1Planar bent_chain() {
  bar1v::Graph1Planar g;
  g.vertex_count = 8;
  const int a = 0, b = 1, e = 2, f = 3, c = 4, gg = 5, h = 6, d = 7;
  auto push = [&](int u, int v) {
    g.edges.emplace_back(u, v);
    return g.m() - 1;
  };
  push(a, b);
  push(b, c);
  push(c, d);
  push(d, a);
  const int q0d1 = push(a, c);
  const int q0d2 = push(b, d);
  push(b, e);
  push(e, f);
  push(f, c);
  const int q1d1 = push(b, f);
  const int q1d2 = push(e, c);
  push(c, gg);
  push(gg, h);
  push(h, d);
  const int q2d1 = push(c, h);
  const int q2d2 = push(gg, d);
  g.crossing_pairs = {{q0d1, q0d2}, {q1d1, q1d2}, {q2d1, q2d2}};
  g.outer_order = std::vector<int>{a, b, e, f, c, gg, h, d};
  g.labels = {"a", "b", "e", "f", "c", "g", "h", "d"};
  return g;
}

// Like bent_chain, but the second branch hangs off side (d,a), which puts the
// extra sink counterclockwise past the top-labeled vertex: its dummy edge has
// to hug the circle clockwise.
//   ids: a=0 b=1 e=2 f=3 c=4 d=5 g=6 h=7, hull in this order.
inline bar1v::Graph1Planar bent_chain_mirrored() {
  bar1v::Graph1Planar g;
  g.vertex_count = 8;
  const int a = 0, b = 1, e = 2, f = 3, c = 4, d = 5, gg = 6, h = 7;
  auto push = [&](int u, int v) {
    g.edges.emplace_back(u, v);
    return g.m() - 1;
  };
  push(a, b);
  push(b, c);
  push(c, d);
  push(d, a);
  const int q0d1 = push(a, c);
  const int q0d2 = push(b, d);
  push(b, e);
  push(e, f);
  push(f, c);
  const int q1d1 = push(b, f);
  const int q1d2 = push(e, c);
  push(d, gg);
  push(gg, h);
  push(h, a);
  const int q2d1 = push(d, h);
  const int q2d2 = push(gg, a);
  g.crossing_pairs = {{q0d1, q0d2}, {q1d1, q1d2}, {q2d1, q2d2}};
  g.outer_order = std::vector<int>{a, b, e, f, c, d, gg, h};
  g.labels = {"a", "b", "e", "f", "c", "d", "g", "h"};
  return g;
}

// K4 with one crossing pair; every neighbor pair is adjacent.
inline bar1v::Graph1Planar k4() {
  bar1v::Graph1Planar g;
  g.vertex_count = 4;
  g.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  g.crossing_pairs = {{1, 4}};
  return g;
}

} // namespace fixtures
