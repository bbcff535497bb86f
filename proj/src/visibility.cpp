#include "bar1v/visibility.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "bar1v/error.hpp"

namespace bar1v {

namespace {

void check_path_shape(const PlaneStGraph& g, const ConstraintPath& path) {
  if (path.empty()) fail(Err::InvalidParams, "empty constraint path");
  for (int a : path)
    if (a < 0 || a >= g.m()) fail(Err::UnknownEdge, "arc " + std::to_string(a));
  for (size_t i = 0; i + 1 < path.size(); ++i)
    if (g.emb.arcs[path[i]].second != g.emb.arcs[path[i + 1]].first)
      fail(Err::InvalidParams, "arc sequence is not a directed path");
}

BarDrawing assemble(const PlaneStGraph& g, const Numbering& y,
                    const std::vector<int>& face_x, const std::vector<int>& segment_x) {
  BarDrawing d;
  d.bars.reserve(g.n());
  for (int v = 0; v < g.n(); ++v) {
    Bar b;
    b.vertex = v;
    b.y = y[v];
    b.x0 = face_x[g.left_of_vertex[v]];
    b.x1 = std::max(face_x[g.right_of_vertex[v]] - 1, b.x0);
    d.bars.push_back(b);
  }
  d.segments.reserve(g.m());
  for (int a = 0; a < g.m(); ++a) {
    const auto& [u, v] = g.emb.arcs[a];
    d.segments.push_back(Segment{u, v, segment_x[a], y[u], y[v]});
  }
  return d;
}

Numbering resolve_y(const PlaneStGraph& g, const std::optional<Numbering>& y_numbering) {
  if (!y_numbering) return unit_topological_numbering(g.n(), g.emb.arcs);
  const Numbering& y = *y_numbering;
  if (static_cast<int>(y.size()) != g.n())
    fail(Err::InvalidNumbering, "one value per vertex required");
  for (const auto& [u, v] : g.emb.arcs)
    if (y[v] < y[u] + 1)
      fail(Err::InvalidNumbering,
           "arc " + std::to_string(u) + "->" + std::to_string(v) + " not increasing");
  return y;
}

} // namespace

BarDrawing visibility_drawing(const PlaneStGraph& g,
                              const std::optional<Numbering>& y_numbering) {
  const Numbering y = resolve_y(g, y_numbering);
  const DualStGraph dual = dual_of(g);
  const Numbering x = weighted_topological_numbering(dual.vertex_count, dual.arcs, dual.weights);
  std::vector<int> seg_x(g.m());
  for (int a = 0; a < g.m(); ++a) seg_x[a] = x[g.left[a]];
  return assemble(g, y, x, seg_x);
}

bool check_nonintersecting(const PlaneStGraph& g, const ConstraintPaths& paths) {
  for (const auto& path : paths) check_path_shape(g, path);

  std::vector<char> used(g.m(), 0);
  for (const auto& path : paths)
    for (int a : path) {
      if (used[a]) return false; // not edge disjoint
      used[a] = 1;
    }

  // Interior visits per vertex: the slots of the incoming and outgoing arc.
  std::map<int, std::vector<std::pair<int, int>>> through;
  for (const auto& path : paths)
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      const int v = g.emb.arcs[path[i]].second;
      through[v].push_back({g.slot_at_dest[path[i]], g.slot_at_orig[path[i + 1]]});
    }

  for (const auto& [v, visits] : through) {
    const int deg = static_cast<int>(g.emb.rotation[v].size());
    for (size_t i = 0; i < visits.size(); ++i)
      for (size_t j = i + 1; j < visits.size(); ++j) {
        const auto [a, b] = visits[i];
        const auto [c, d] = visits[j];
        const int b1 = (b - a + deg) % deg;
        const int c1 = (c - a + deg) % deg;
        const int d1 = (d - a + deg) % deg;
        if ((c1 < b1) != (d1 < b1)) return false; // interleaved: paths cross
      }
  }
  return true;
}

BarDrawing constrained_visibility_drawing(const PlaneStGraph& g,
                                          const ConstraintPaths& paths) {
  if (!check_nonintersecting(g, paths))
    fail(Err::PathsIntersect, "constraint paths share an edge or cross");

  // Every edge joins exactly one path; uncovered edges become singletons.
  std::vector<int> path_of(g.m(), -1);
  int path_total = static_cast<int>(paths.size());
  for (size_t p = 0; p < paths.size(); ++p)
    for (int a : paths[p]) path_of[a] = static_cast<int>(p);
  for (int a = 0; a < g.m(); ++a)
    if (path_of[a] == -1) path_of[a] = path_total++;

  // Combined dag over faces and paths: for each edge e,
  //   left(e) --0--> path(e) --1--> right(e).
  // Numbering it gives each path one column strictly between its edges' left
  // and right faces; with only singleton paths the face values coincide with
  // the dual numbering, so the drawing equals the unconstrained one.
  const int f = g.face_count;
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> weights;
  arcs.reserve(2 * g.m());
  for (int a = 0; a < g.m(); ++a) {
    arcs.emplace_back(g.left[a], f + path_of[a]);
    weights.push_back(0);
    arcs.emplace_back(f + path_of[a], g.right[a]);
    weights.push_back(1);
  }
  Numbering vals;
  try {
    vals = weighted_topological_numbering(f + path_total, arcs, weights);
  } catch (const Error& e) {
    if (e.code() == Err::CycleDetected)
      fail(Err::PathsIntersect, "path arrangement admits no left-to-right order");
    throw;
  }

  const Numbering y = resolve_y(g, {});
  std::vector<int> face_x(vals.begin(), vals.begin() + f);
  std::vector<int> seg_x(g.m());
  for (int a = 0; a < g.m(); ++a) seg_x[a] = vals[f + path_of[a]];
  return assemble(g, y, face_x, seg_x);
}

} // namespace bar1v
