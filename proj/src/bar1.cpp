#include "bar1v/bar1.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "bar1v/error.hpp"
#include "bar1v/numbering.hpp"

namespace bar1v {

namespace {

std::pair<int, int> norm(int u, int v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }

std::map<std::pair<int, int>, int> edge_index_map(const Graph1Planar& g) {
  std::map<std::pair<int, int>, int> idx;
  for (int e = 0; e < g.m(); ++e) idx[norm(g.edges[e].first, g.edges[e].second)] = e;
  return idx;
}

struct Quadrangle {
  int pair_index;
  int main_edge;  // diagonal holding the min and max label
  int other_edge;
  int lo, hi;     // endpoints of the main diagonal, lo = min label
  int w;          // reroute vertex, right of the directed chord lo->hi
  int w_other;    // fourth corner
};

} // namespace

void check_outer_structure(const Graph1Planar& g) {
  check_invariants(g);
  if (!g.outer_order) fail(Err::NotOuter1Plane, "outer_order missing");
  const auto& order = *g.outer_order;
  const int n = g.vertex_count;
  if (n < 3) fail(Err::NotOuter1Plane, "too few vertices");
  for (int i = 0; i < n; ++i)
    if (!g.has_edge(order[i], order[(i + 1) % n]))
      fail(Err::NotOuter1Plane, "outer cycle edge missing between " +
                                    std::to_string(order[i]) + " and " +
                                    std::to_string(order[(i + 1) % n]));
  const auto crossing = g.crossing_edge_mask();
  for (const auto& [e1, e2] : g.crossing_pairs) {
    const auto [a, c] = g.edges[e1];
    const auto [b, d] = g.edges[e2];
    std::set<int> corners{a, b, c, d};
    if (corners.size() != 4)
      fail(Err::NotOuter1Plane, "crossing pair without four distinct endpoints");
    for (auto [u, v] : {norm(a, b), norm(b, c), norm(c, d), norm(d, a)}) {
      const int side = g.edge_index(u, v);
      if (side < 0 || crossing[side])
        fail(Err::NotOuter1Plane, "crossing not surrounded by a 4-cycle of non-crossing edges");
    }
  }
}

DiagonalLabeling diagonal_labeling(const Graph1Planar& g) {
  check_outer_structure(g);
  const auto& order = *g.outer_order;
  const int n = g.vertex_count;

  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  const auto adj = g.adjacency();
  const auto crossing = g.crossing_edge_mask();

  // Neighbors of v counterclockwise around the circle, starting just past v.
  const auto rotation_of = [&](int v) {
    std::vector<int> nb = adj[v];
    std::sort(nb.begin(), nb.end(), [&](int a, int b) {
      return (pos[a] - pos[v] + n) % n < (pos[b] - pos[v] + n) % n;
    });
    return nb;
  };

  DiagonalLabeling lab;
  lab.label.assign(n, 0);
  int start = order[0];
  for (int v : order) start = std::min(start, v);

  int next = 1;
  std::vector<int> by_label(n + 1, -1);
  lab.label[start] = next;
  by_label[next] = start;
  ++next;
  for (int cur = 1; cur < next && next <= n; ++cur) {
    const int v = by_label[cur];
    const auto rot = rotation_of(v);
    for (int pass = 0; pass < 2; ++pass) {
      for (int w : rot) {
        if (lab.label[w] != 0) continue;
        const bool crossing_edge = crossing[g.edge_index(v, w)];
        if (crossing_edge != (pass == 1)) continue;
        lab.label[w] = next;
        by_label[next] = w;
        ++next;
      }
    }
  }
  if (next != n + 1) fail(Err::NotOuter1Plane, "graph is not connected");

  for (const auto& [e1, e2] : g.crossing_pairs) {
    const auto [a, c] = g.edges[e1];
    const auto [b, d] = g.edges[e2];
    const std::array<int, 4> corners{a, c, b, d};
    int lo = corners[0], hi = corners[0];
    for (int v : corners) {
      if (lab.label[v] < lab.label[lo]) lo = v;
      if (lab.label[v] > lab.label[hi]) hi = v;
    }
    const bool on_e1 = (std::set<int>{a, c} == std::set<int>{lo, hi});
    const bool on_e2 = (std::set<int>{b, d} == std::set<int>{lo, hi});
    if (!on_e1 && !on_e2)
      fail(Err::LabelingPropertyViolated,
           "quadrangle of edges " + std::to_string(e1) + "," + std::to_string(e2) +
               " has min and max on no diagonal");
  }
  return lab;
}

// ---------------------------------------------------------------------------
// maximal outer 1-plane pipeline
// ---------------------------------------------------------------------------

OuterPlanarization planarize_maximal_outer(const Graph1Planar& g) {
  OuterPlanarization out;
  out.labeling = diagonal_labeling(g);
  const auto& label = out.labeling.label;
  const auto& order = *g.outer_order;
  const int n = g.vertex_count;

  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  const auto ccw_dist = [&](int from, int to) { return (pos[to] - pos[from] + n) % n; };

  // Quadrangles with their rerouted diagonal. Vertices strictly inside the
  // counterclockwise arc from lo to hi lie to the right of the chord lo->hi.
  std::vector<Quadrangle> quads;
  std::vector<bool> is_main(g.m(), false);
  for (size_t pi = 0; pi < g.crossing_pairs.size(); ++pi) {
    const auto& [e1, e2] = g.crossing_pairs[pi];
    const auto [a, c] = g.edges[e1];
    const auto [b, d] = g.edges[e2];
    Quadrangle quad;
    quad.pair_index = static_cast<int>(pi);
    int lo = a, hi = a;
    for (int v : {a, c, b, d}) {
      if (label[v] < label[lo]) lo = v;
      if (label[v] > label[hi]) hi = v;
    }
    const bool main_is_e1 = (std::set<int>{a, c} == std::set<int>{lo, hi});
    quad.main_edge = main_is_e1 ? e1 : e2;
    quad.other_edge = main_is_e1 ? e2 : e1;
    quad.lo = lo;
    quad.hi = hi;
    const auto [w1, w2] = g.edges[quad.other_edge];
    const bool w1_right = ccw_dist(lo, w1) < ccw_dist(lo, hi);
    quad.w = w1_right ? w1 : w2;
    quad.w_other = w1_right ? w2 : w1;
    is_main[quad.main_edge] = true;
    quads.push_back(quad);
  }

  // Arcs of the planarized multigraph. Copies hug the quadrangle interior.
  struct ArcInfo {
    int kind; // 0 plain, 1 copy, 2 dummy
    int ref;  // plain: edge index; copy: quadrangle index
  };
  EmbeddedDigraph emb;
  emb.vertex_count = n;
  std::vector<ArcInfo> info;
  out.arc_of_edge.assign(g.m(), -1);

  const auto dir = [&](int u, int v) {
    return label[u] < label[v] ? std::pair{u, v} : std::pair{v, u};
  };
  for (int e = 0; e < g.m(); ++e) {
    if (is_main[e]) continue;
    out.arc_of_edge[e] = emb.m();
    emb.arcs.push_back(dir(g.edges[e].first, g.edges[e].second));
    info.push_back({0, e});
  }
  out.path_of_pair.assign(g.crossing_pairs.size(), -1);
  out.reroute_vertex.assign(g.crossing_pairs.size(), -1);
  out.main_edge_of_pair.assign(g.crossing_pairs.size(), -1);
  for (size_t qi = 0; qi < quads.size(); ++qi) {
    const auto& quad = quads[qi];
    const int a1 = emb.m();
    emb.arcs.emplace_back(quad.lo, quad.w);
    info.push_back({1, static_cast<int>(qi)});
    const int a2 = emb.m();
    emb.arcs.emplace_back(quad.w, quad.hi);
    info.push_back({1, static_cast<int>(qi)});
    out.path_of_pair[quad.pair_index] = static_cast<int>(out.paths.size());
    out.reroute_vertex[quad.pair_index] = quad.w;
    out.main_edge_of_pair[quad.pair_index] = quad.main_edge;
    out.paths.push_back({a1, a2});
  }

  // Dummy arcs: every sink other than the label-n vertex is tied to it,
  // hugging the outside of the circle on the side that avoids the source.
  std::vector<int> by_label(n + 1);
  for (int v = 0; v < n; ++v) by_label[label[v]] = v;
  const int s = by_label[1];
  const int t = by_label[n];

  std::vector<int> outdeg(n, 0);
  for (const auto& [u, v] : emb.arcs) {
    (void)v;
    ++outdeg[u];
  }
  struct Dummy {
    int from;
    bool ccw; // hugging direction
    int span; // interval length toward t
  };
  std::vector<Dummy> dummies;
  for (int v = 0; v < n; ++v) {
    if (v == t || outdeg[v] > 0) continue;
    const bool s_inside_cw = [&] {
      for (int p = (pos[v] - 1 + n) % n; p != pos[t]; p = (p - 1 + n) % n)
        if (order[p] == s) return true;
      return false;
    }();
    const bool ccw = s_inside_cw;
    const int span = ccw ? ccw_dist(v, t) : ccw_dist(t, v);
    dummies.push_back({v, ccw, span});
  }

  // Base rotations: neighbors counterclockwise by circle position; a copy and
  // its parallel chord tie-break toward the copy's quadrangle interior.
  std::vector<std::vector<std::tuple<int, int, int>>> keyed(n); // (kappa, adj, arc)
  for (int ai = 0; ai < emb.m(); ++ai) {
    const auto& [u, v] = emb.arcs[ai];
    for (int end = 0; end < 2; ++end) {
      const int at = end == 0 ? u : v;
      const int other = end == 0 ? v : u;
      int adj = 0;
      if (info[ai].kind == 1) {
        // probe: a quadrangle corner off this copy; both lie on the interior side
        const auto& quad = quads[info[ai].ref];
        const int probe = (quad.hi == at || quad.hi == other) ? quad.w_other : quad.hi;
        adj = ccw_dist(at, probe) > ccw_dist(at, other) ? 1 : -1;
      }
      keyed[at].emplace_back(ccw_dist(at, other), adj, ai);
    }
  }
  emb.rotation.assign(n, {});
  for (int v = 0; v < n; ++v) {
    std::sort(keyed[v].begin(), keyed[v].end());
    for (const auto& [kappa, adj, ai] : keyed[v]) {
      (void)kappa;
      (void)adj;
      emb.rotation[v].push_back(ai);
    }
  }

  // Dummies enter through the outward gap in each rotation. At t the
  // counterclockwise huggers come first (nested inside out), then the
  // clockwise ones outermost first.
  std::vector<Dummy> at_t_ccw, at_t_cw;
  for (const auto& dm : dummies) (dm.ccw ? at_t_ccw : at_t_cw).push_back(dm);
  std::sort(at_t_ccw.begin(), at_t_ccw.end(),
            [](const Dummy& x, const Dummy& y) { return x.span < y.span; });
  std::sort(at_t_cw.begin(), at_t_cw.end(),
            [](const Dummy& x, const Dummy& y) { return x.span > y.span; });
  std::map<int, int> dummy_arc_of_from;
  for (const auto& dm : dummies) {
    const int ai = emb.m();
    emb.arcs.emplace_back(dm.from, t);
    info.push_back({2, -1});
    out.dummy_arcs.push_back(ai);
    dummy_arc_of_from[dm.from] = ai;
    emb.rotation[dm.from].push_back(ai);
  }
  for (const auto& dm : at_t_ccw) emb.rotation[t].push_back(dummy_arc_of_from[dm.from]);
  for (const auto& dm : at_t_cw) emb.rotation[t].push_back(dummy_arc_of_from[dm.from]);

  // Outer reference: the hull arc from s to its counterclockwise neighbor
  // keeps the unbounded face on its right (no dummy covers it).
  const int s_next = order[(pos[s] + 1) % n];
  int hull_arc = -1;
  for (int ai = 0; ai < emb.m(); ++ai)
    if (info[ai].kind == 0 && emb.arcs[ai] == std::pair{s, s_next}) hull_arc = ai;
  if (hull_arc < 0)
    fail(Err::NotOuter1Plane, "hull edge at the start vertex is a rerouted diagonal");
  emb.outer_arc = hull_arc;
  emb.outer_side = EmbeddedDigraph::Side::Right;

  out.st = build_plane_st_graph(emb, s, t);
  return out;
}

BarDrawing draw_maximal_outer(const Graph1Planar& g) {
  OuterPlanarization pl = planarize_maximal_outer(g);
  const BarDrawing inner = constrained_visibility_drawing(pl.st, pl.paths);

  BarDrawing d;
  d.bars = inner.bars;
  d.segments.resize(g.m());
  for (int e = 0; e < g.m(); ++e) {
    if (pl.arc_of_edge[e] >= 0) {
      Segment seg = inner.segments[pl.arc_of_edge[e]];
      seg.u = g.edges[e].first;
      seg.v = g.edges[e].second;
      d.segments[e] = seg;
    }
  }
  for (size_t pi = 0; pi < g.crossing_pairs.size(); ++pi) {
    const int path = pl.path_of_pair[pi];
    if (path < 0) continue;
    const Segment& s1 = inner.segments[pl.paths[path][0]];
    const Segment& s2 = inner.segments[pl.paths[path][1]];
    if (s1.x != s2.x)
      fail(Err::PathsIntersect, "rerouted diagonal was not drawn on one column");
    const int e = pl.main_edge_of_pair[pi];
    d.segments[e] = Segment{g.edges[e].first, g.edges[e].second, s1.x,
                            std::min(s1.y0, s2.y0), std::max(s1.y1, s2.y1)};
  }
  d.normalize();
  return d;
}

// ---------------------------------------------------------------------------
// diagonal grid
// ---------------------------------------------------------------------------

GridStGraph grid_st_graph(DiagonalGridParams params) {
  const int p = params.p, q = params.q;
  if (p < 2 || q < 2) fail(Err::InvalidParams, "diagonal grid needs p >= 2 and q >= 2");

  GridStGraph out;
  const auto id = [q](int i, int j) { return (i - 1) * q + (j - 1); };
  const int s = p * q;
  const int t = p * q + 1;
  out.s = s;
  out.t = t;

  EmbeddedDigraph emb;
  emb.vertex_count = p * q + 2;

  // arc tables; -1 for absent
  std::vector<int> h((p + 1) * (q + 1), -1), vv((p + 1) * (q + 1), -1), dd((p + 1) * (q + 1), -1);
  std::vector<int> sa(q + 1, -1), ta(q + 1, -1);
  const auto cell = [q](int i, int j) { return i * (q + 1) + j; };

  const Graph1Planar grid = gen_diagonal_grid(params);
  out.arc_of_edge.assign(grid.m(), -1);
  int e = 0;
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j < q; ++j) {
      h[cell(i, j)] = emb.m();
      out.arc_of_edge[e++] = emb.m();
      emb.arcs.emplace_back(id(i, j), id(i, j + 1));
    }
  for (int i = 1; i < p; ++i)
    for (int j = 1; j <= q; ++j) {
      vv[cell(i, j)] = emb.m();
      out.arc_of_edge[e++] = emb.m();
      emb.arcs.emplace_back(id(i, j), id(i + 1, j));
    }
  for (int i = 1; i < p; ++i)
    for (int j = 1; j < q; ++j) {
      dd[cell(i, j)] = emb.m();
      out.arc_of_edge[e++] = emb.m(); // right diagonal
      out.diagonal_arcs.push_back(emb.m());
      emb.arcs.emplace_back(id(i, j), id(i + 1, j + 1));
      ++e; // left diagonal stays deleted
    }
  for (int j = 1; j <= q; ++j) {
    sa[j] = emb.m();
    emb.arcs.emplace_back(s, id(1, j));
  }
  for (int j = 1; j <= q; ++j) {
    ta[j] = emb.m();
    emb.arcs.emplace_back(id(p, j), t);
  }

  // counterclockwise rotations from the geometric grid placement
  emb.rotation.assign(emb.vertex_count, {});
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= q; ++j) {
      auto& rot = emb.rotation[id(i, j)];
      if (j < q) rot.push_back(h[cell(i, j)]);                       // east
      if (i < p && j < q) rot.push_back(dd[cell(i, j)]);             // northeast
      rot.push_back(i < p ? vv[cell(i, j)] : ta[j]);                 // north
      if (j > 1) rot.push_back(h[cell(i, j - 1)]);                   // west
      if (i > 1 && j > 1) rot.push_back(dd[cell(i - 1, j - 1)]);     // southwest
      rot.push_back(i > 1 ? vv[cell(i - 1, j)] : sa[j]);             // south
    }
  for (int j = q; j >= 1; --j) emb.rotation[s].push_back(sa[j]);
  for (int j = 1; j <= q; ++j) emb.rotation[t].push_back(ta[j]);
  emb.outer_arc = sa[1];
  emb.outer_side = EmbeddedDigraph::Side::Left;

  out.y.assign(emb.vertex_count, 0);
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= q; ++j) out.y[id(i, j)] = j + 2 * (i - 1);
  out.y[s] = 0;
  out.y[t] = q + 2 * p - 1;

  out.st = build_plane_st_graph(emb, s, t);
  return out;
}

BarDrawing draw_diagonal_grid(DiagonalGridParams params) {
  const int p = params.p, q = params.q;
  GridStGraph gs = grid_st_graph(params);
  const Graph1Planar grid = gen_diagonal_grid(params);
  const BarDrawing vis = visibility_drawing(gs.st, gs.y);

  // Columns hosting a right diagonal each get one fresh column inserted after
  // them; the grid structure keeps those insertion points two apart.
  std::vector<int> inserted;
  for (int a : gs.diagonal_arcs) inserted.push_back(vis.segments[a].x);
  std::sort(inserted.begin(), inserted.end());
  inserted.erase(std::unique(inserted.begin(), inserted.end()), inserted.end());
  const auto remap = [&](int x) {
    return x + static_cast<int>(std::lower_bound(inserted.begin(), inserted.end(), x) -
                                inserted.begin());
  };

  BarDrawing d;
  d.bars.reserve(p * q);
  for (int v = 0; v < p * q; ++v) {
    Bar b = vis.bars[v];
    b.x0 = remap(b.x0);
    b.x1 = remap(b.x1);
    b.y -= 1; // drop the s row
    d.bars.push_back(b);
  }

  d.segments.resize(grid.m());
  for (int e = 0; e < grid.m(); ++e) {
    if (gs.arc_of_edge[e] < 0) continue;
    Segment seg = vis.segments[gs.arc_of_edge[e]];
    seg.x = remap(seg.x);
    seg.y0 -= 1;
    seg.y1 -= 1;
    seg.u = grid.edges[e].first;
    seg.v = grid.edges[e].second;
    d.segments[e] = seg;
  }

  // Per cell: stretch the up-left bar over the diagonal's column to the fresh
  // one, pull the bottom-right bar back onto it, and drop the deleted left
  // diagonal into the fresh column. The right diagonal then crosses exactly
  // the up-left bar.
  const auto id = [q](int i, int j) { return (i - 1) * q + (j - 1); };
  int diag = 0;
  for (int i = 1; i < p; ++i)
    for (int j = 1; j < q; ++j) {
      const int a = gs.diagonal_arcs[diag++];
      const int col = remap(vis.segments[a].x);
      const int fresh = col + 1;
      Bar& dbar = d.bars[id(i + 1, j)];     // up-left corner
      Bar& bbar = d.bars[id(i, j + 1)];     // bottom-right corner
      if (dbar.x1 + 2 != fresh || bbar.x0 - 1 != fresh)
        throw std::logic_error("diagonal grid: insertion columns drifted");
      dbar.x1 += 2;
      bbar.x0 -= 1;
      const int e_left = grid.edge_index(id(i, j + 1), id(i + 1, j));
      d.segments[e_left] = Segment{grid.edges[e_left].first, grid.edges[e_left].second,
                                   fresh, gs.y[id(i, j + 1)] - 1, gs.y[id(i + 1, j)] - 1};
    }

  d.normalize();
  return d;
}

// ---------------------------------------------------------------------------
// recursive quadrangle
// ---------------------------------------------------------------------------

BarDrawing draw_recursive_quadrangle(RecursiveQuadrangleParams params) {
  if (params.depth < 0) fail(Err::InvalidParams, "depth must be >= 0");
  const Graph1Planar g = gen_recursive_quadrangle(params);
  const auto eidx = edge_index_map(g);
  const auto at = [&](int u, int v) { return eidx.at(norm(u, v)); };

  BarDrawing d;
  d.bars.resize(g.vertex_count);
  d.segments.resize(g.m());
  const auto set_bar = [&](int v, int y, int x0, int x1) {
    d.bars[v] = Bar{v, y, x0, x1};
  };
  const auto set_seg = [&](int u, int v, int x) {
    const int e = at(u, v);
    const int ylo = std::min(d.bars[u].y, d.bars[v].y);
    const int yhi = std::max(d.bars[u].y, d.bars[v].y);
    d.segments[e] = Segment{g.edges[e].first, g.edges[e].second, x, ylo, yhi};
  };

  // innermost ring: a bottommost, d, b, c topmost
  int a = 0, b = 1, c = 2, dd = 3;
  set_bar(a, 0, 1, 5);
  set_bar(dd, 1, 0, 3);
  set_bar(b, 2, 1, 4);
  set_bar(c, 3, 0, 5);
  set_seg(a, b, 2);
  set_seg(b, c, 4);
  set_seg(c, dd, 0);
  set_seg(dd, a, 1);
  set_seg(a, c, 5);
  set_seg(b, dd, 3);

  int m1 = 0, E = 5;       // current outer left start and right end of bar c
  int bottom = 0, top = 3; // current outer rows

  const int rings = params.depth + 2;
  for (int r = 1; r < rings; ++r) {
    const int a2 = 4 * r, b2 = 4 * r + 1, c2 = 4 * r + 2, d2 = 4 * r + 3;

    d.bars[a].x0 = m1 - 3;
    d.bars[dd].x0 = m1 - 4;
    d.bars[b].x0 = m1 - 1;
    d.bars[b].x1 = E + 4;
    d.bars[c].x1 = E + 5;

    set_bar(a2, bottom - 2, m1 - 6, E + 1);
    set_bar(d2, bottom - 1, m1 - 7, E + 2);
    set_bar(b2, top + 1, m1 - 6, E + 4);
    set_bar(c2, top + 2, m1 - 7, E + 5);

    set_seg(a2, b2, m1 - 6);
    set_seg(b2, c2, E + 4);
    set_seg(c2, d2, m1 - 7);
    set_seg(d2, a2, m1 - 5);
    set_seg(a, a2, m1 - 3);
    set_seg(b, b2, E + 4);
    set_seg(c, c2, E + 5);
    set_seg(dd, d2, m1 - 1);
    set_seg(a, b2, m1 - 3);
    set_seg(b, a2, E + 1);
    set_seg(b, c2, m1 - 1);
    set_seg(c, b2, E + 3);
    set_seg(c, d2, E + 2);
    set_seg(dd, c2, m1 - 4);
    set_seg(dd, a2, m1 - 4);
    set_seg(a, d2, m1 - 2);

    a = a2;
    b = b2;
    c = c2;
    dd = d2;
    m1 -= 7;
    E += 5;
    bottom -= 2;
    top += 2;

    // step invariants: outermost rows in order a,d,...,b,c; c,d share the
    // smallest start and a,b the second smallest; (a,b) crosses bar d
    const Segment& sab = d.segments[at(a, b)];
    const Bar& bard = d.bars[dd];
    if (!(d.bars[a].y == bottom && d.bars[dd].y == bottom + 1 && d.bars[b].y == top - 1 &&
          d.bars[c].y == top))
      throw std::logic_error("recursive quadrangle: row order broken");
    if (!(d.bars[c].x0 == m1 && d.bars[dd].x0 == m1 && d.bars[a].x0 == m1 + 1 &&
          d.bars[b].x0 == m1 + 1))
      throw std::logic_error("recursive quadrangle: start order broken");
    if (!(sab.x >= bard.x0 && sab.x <= bard.x1 && bard.y > sab.y0 && bard.y < sab.y1))
      throw std::logic_error("recursive quadrangle: (a,b) misses bar d");
  }

  if (params.optimal) {
    d.bars[dd].x1 = E + 1;
    d.bars[b].x1 = E + 1;
    d.bars[a].x1 = E + 2;
    d.bars[c].x1 = E + 2;
    set_seg(b, dd, E + 1);
    set_seg(a, c, E + 2);
  }

  d.normalize();
  return d;
}

// ---------------------------------------------------------------------------
// pseudo double wheels
// ---------------------------------------------------------------------------

namespace {

// Cycle vertex ids double as stacking depth: depth 0 (v_1) sits highest.
struct WheelFrame {
  int n;
  int rows; // total bar rows
  int x_id, y_id;
  std::vector<std::vector<int>> cols; // per vertex: its segment columns
};

int wheel_row(const WheelFrame& f, int vertex) {
  if (vertex == f.y_id) return 2 * f.n + 1;
  if (vertex == f.x_id) return 2 * f.n;
  if (vertex > f.y_id) return f.rows - 1; // z above y in the odd case
  return 2 * f.n - 1 - vertex;
}

} // namespace

BarDrawing draw_pdw_even(int n) {
  const Graph1Planar g = gen_pseudo_double_wheel_even(n);
  const auto eidx = edge_index_map(g);
  const auto at = [&](int u, int v) { return eidx.at(norm(u, v)); };

  WheelFrame f{n, 2 * n + 2, 2 * n, 2 * n + 1, {}};
  f.cols.resize(g.vertex_count);

  BarDrawing d;
  d.segments.resize(g.m());
  const auto row = [&](int v) { return wheel_row(f, v); };
  const auto put = [&](int u, int v, int x) {
    const int e = at(u, v);
    d.segments[e] = Segment{g.edges[e].first, g.edges[e].second, x,
                            std::min(row(u), row(v)), std::max(row(u), row(v))};
    f.cols[u].push_back(x);
    f.cols[v].push_back(x);
  };

  const auto yport = [](int k) { return -2 * k - 2; };
  const auto xport = [](int k) { return -2 * k - 1; };
  const auto v_of = [](int i) { return 2 * (i - 1); };
  const auto u_of = [](int i) { return 2 * (i - 1) + 1; };

  for (int k = 0; k < 2 * n - 1; ++k) put(k, k + 1, 0); // cycle path
  put(v_of(1), u_of(n), 5);                             // closing cycle edge
  for (int i = 1; i <= n; ++i) {
    put(f.x_id, u_of(i), xport(u_of(i)));
    put(f.x_id, v_of(i), xport(v_of(i)));
    put(f.y_id, v_of(i), yport(v_of(i)));
    put(f.y_id, u_of(i), yport(u_of(i)));
  }
  for (int i = 1; i < n; ++i) put(v_of(i), v_of(i + 1), 1);
  put(v_of(n), v_of(1), 4);
  for (int i = 1; i < n; ++i) put(u_of(i), u_of(i + 1), 2);
  put(u_of(n), u_of(1), 3);

  d.bars.resize(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) {
    const auto [lo, hi] = std::minmax_element(f.cols[v].begin(), f.cols[v].end());
    d.bars[v] = Bar{v, row(v), *lo, *hi};
  }
  // every port column must reach across bar x (the lines into y cross it)
  d.bars[f.x_id].x0 = yport(2 * n - 1);
  d.normalize();
  return d;
}

BarDrawing draw_pdw_odd(int n) {
  const Graph1Planar g = gen_pseudo_double_wheel_odd(n);
  const auto eidx = edge_index_map(g);
  const auto at = [&](int u, int v) { return eidx.at(norm(u, v)); };

  const int x_id = 2 * n, y_id = 2 * n + 1, z_id = 2 * n + 2;
  WheelFrame f{n, 2 * n + 3, x_id, y_id, {}};
  f.cols.resize(g.vertex_count);

  BarDrawing d;
  d.segments.resize(g.m());
  const auto row = [&](int v) { return wheel_row(f, v); };
  const auto put = [&](int u, int v, int x) {
    const int e = at(u, v);
    d.segments[e] = Segment{g.edges[e].first, g.edges[e].second, x,
                            std::min(row(u), row(v)), std::max(row(u), row(v))};
    f.cols[u].push_back(x);
    f.cols[v].push_back(x);
  };

  const auto v_of = [](int i) { return 2 * (i - 1); };
  const auto u_of = [](int i) { return 2 * (i - 1) + 1; };

  // the split leaves y over the top arc v_1..u_2 and z over the rest;
  // v_1 and u_2 are the two degree-8 cycle vertices
  const auto adj = g.adjacency();
  std::vector<bool> y_side(g.vertex_count, false), z_side(g.vertex_count, false);
  for (int w : adj[y_id])
    if (w < 2 * n) y_side[w] = true;
  for (int w : adj[z_id])
    if (w < 2 * n) z_side[w] = true;
  if (!(y_side[v_of(1)] && z_side[v_of(1)] && y_side[u_of(2)] && z_side[u_of(2)]))
    throw std::logic_error("pdw odd: unexpected split boundary");

  // port slots, four columns per cycle vertex
  const auto slot = [](int k, int which) { return -4 * k - 4 + which; };
  const auto xport = [&](int k) { return slot(k, 2); };
  const auto hubport = [&](int k) { // column of the y- or z-line of vertex k
    if (k == 0) return std::pair{slot(k, 0), slot(k, 1)};  // (y, z)
    if (k == 3) return std::pair{slot(k, 1), slot(k, 0)};  // (y, z)
    return std::pair{slot(k, 1), slot(k, 1)};
  };

  for (int k = 0; k < 2 * n - 1; ++k) put(k, k + 1, 0);
  put(v_of(1), u_of(n), 6);
  for (int k = 0; k < 2 * n; ++k) {
    put(x_id, k, xport(k));
    const auto [ycol, zcol] = hubport(k);
    if (y_side[k]) put(y_id, k, ycol);
    if (z_side[k]) put(z_id, k, zcol);
  }
  for (int i = 1; i < n; ++i) put(v_of(i), v_of(i + 1), 1);
  put(v_of(n), v_of(1), 5);
  for (int i = 1; i < n; ++i) put(u_of(i), u_of(i + 1), 2);
  put(u_of(n), u_of(1), 4);
  put(v_of(1), u_of(2), 3); // the split pair edge
  put(y_id, z_id, slot(1, 3));

  d.bars.resize(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) {
    const auto [lo, hi] = std::minmax_element(f.cols[v].begin(), f.cols[v].end());
    d.bars[v] = Bar{v, row(v), *lo, *hi};
  }
  d.bars[x_id].x0 = slot(2 * n - 1, 1); // reach under every hub line
  d.normalize();
  return d;
}

} // namespace bar1v
