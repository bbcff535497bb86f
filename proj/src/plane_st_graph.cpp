#include "bar1v/plane_st_graph.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "bar1v/error.hpp"

namespace bar1v {

namespace {

// Half-edge h = 2*arc + dir; dir 0 runs orig->dest, dir 1 runs dest->orig.
inline int arc_of(int h) { return h >> 1; }
inline bool backward(int h) { return h & 1; }

} // namespace

PlaneStGraph build_plane_st_graph(const EmbeddedDigraph& emb, int s, int t) {
  const int n = emb.vertex_count;
  const int m = emb.m();
  if (n <= 0) fail(Err::InvalidParams, "empty vertex set");
  if (s < 0 || s >= n || t < 0 || t >= n || s == t)
    fail(Err::InvalidParams, "bad s/t vertices");
  if (static_cast<int>(emb.rotation.size()) != n)
    fail(Err::EmbeddingInconsistent, "one rotation list per vertex required");
  if (m == 0) fail(Err::InvalidParams, "graph has no arcs");
  if (emb.outer_arc < 0 || emb.outer_arc >= m)
    fail(Err::InvalidParams, "outer_arc out of range");

  for (const auto& [u, v] : emb.arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Err::InvalidParams, "arc endpoint out of range");
    if (u == v) fail(Err::InvalidParams, "self-loop");
  }

  PlaneStGraph g;
  g.emb = emb;
  g.s = s;
  g.t = t;

  // Rotation slots: every arc appears exactly once around each endpoint.
  g.slot_at_orig.assign(m, -1);
  g.slot_at_dest.assign(m, -1);
  for (int v = 0; v < n; ++v) {
    for (size_t k = 0; k < emb.rotation[v].size(); ++k) {
      const int a = emb.rotation[v][k];
      if (a < 0 || a >= m)
        fail(Err::EmbeddingInconsistent, "rotation refers to unknown arc");
      if (emb.arcs[a].first == v) {
        if (g.slot_at_orig[a] != -1)
          fail(Err::EmbeddingInconsistent, "arc repeated in rotation");
        g.slot_at_orig[a] = static_cast<int>(k);
      } else if (emb.arcs[a].second == v) {
        if (g.slot_at_dest[a] != -1)
          fail(Err::EmbeddingInconsistent, "arc repeated in rotation");
        g.slot_at_dest[a] = static_cast<int>(k);
      } else {
        fail(Err::EmbeddingInconsistent, "rotation lists a non-incident arc");
      }
    }
  }
  for (int a = 0; a < m; ++a)
    if (g.slot_at_orig[a] == -1 || g.slot_at_dest[a] == -1)
      fail(Err::EmbeddingInconsistent, "arc missing from a rotation list");

  // Acyclicity first, then degree structure.
  {
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> out(n);
    for (int a = 0; a < m; ++a) {
      out[emb.arcs[a].first].push_back(emb.arcs[a].second);
      ++indeg[emb.arcs[a].second];
    }
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
      if (indeg[v] == 0) stack.push_back(v);
    int done = 0;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      ++done;
      for (int v : out[u])
        if (--indeg[v] == 0) stack.push_back(v);
    }
    if (done != n) fail(Err::NotAcyclic, "digraph has a directed cycle");
  }
  {
    std::vector<int> indeg(n, 0), outdeg(n, 0);
    for (const auto& [u, v] : emb.arcs) {
      ++outdeg[u];
      ++indeg[v];
    }
    for (int v = 0; v < n; ++v) {
      if (indeg[v] == 0 && v != s)
        fail(Err::MultipleSourcesOrSinks, "source other than s: " + std::to_string(v));
      if (outdeg[v] == 0 && v != t)
        fail(Err::MultipleSourcesOrSinks, "sink other than t: " + std::to_string(v));
    }
    if (indeg[s] != 0 || outdeg[t] != 0)
      fail(Err::MultipleSourcesOrSinks, "s must be the source and t the sink");
  }

  // Face tracing. The successor of half-edge h ending at v leaves v along the
  // counterclockwise predecessor of h's arc in rotation[v]; this walks each
  // face keeping it on the left.
  const auto head = [&](int h) {
    return backward(h) ? emb.arcs[arc_of(h)].first : emb.arcs[arc_of(h)].second;
  };
  const auto next_half = [&](int h) {
    const int v = head(h);
    const int a = arc_of(h);
    const auto& rot = emb.rotation[v];
    const int deg = static_cast<int>(rot.size());
    const int slot = backward(h) ? g.slot_at_orig[a] : g.slot_at_dest[a];
    const int b = rot[(slot + deg - 1) % deg];
    return emb.arcs[b].first == v ? 2 * b : 2 * b + 1;
  };

  std::vector<int> face_of(2 * m, -1);
  std::vector<std::vector<int>> walks;
  for (int h0 = 0; h0 < 2 * m; ++h0) {
    if (face_of[h0] != -1) continue;
    const int id = static_cast<int>(walks.size());
    walks.emplace_back();
    int h = h0;
    do {
      if (face_of[h] != -1)
        fail(Err::EmbeddingInconsistent, "face traversal does not close");
      face_of[h] = id;
      walks[id].push_back(h);
      h = next_half(h);
    } while (h != h0);
  }
  const int traced = static_cast<int>(walks.size());
  if (traced != m - n + 2)
    fail(Err::EmbeddingInconsistent,
         "face count " + std::to_string(traced) + " violates the Euler relation");

  const int outer_half =
      emb.outer_side == EmbeddedDigraph::Side::Left ? 2 * emb.outer_arc : 2 * emb.outer_arc + 1;
  const int outer = face_of[outer_half];

  {
    bool s_on = false, t_on = false;
    for (int h : walks[outer]) {
      const int v = head(h);
      s_on = s_on || v == s;
      t_on = t_on || v == t;
    }
    if (!s_on || !t_on) fail(Err::StNotOnOuterFace, "s and t must lie on the outer face");
  }

  // Split the outer face into s_star (left of left-boundary arcs) and t_star
  // (right of right-boundary arcs); inner faces keep compact ids.
  std::vector<int> remap(traced, -1);
  int next_id = 0;
  for (int f = 0; f < traced; ++f)
    if (f != outer) remap[f] = next_id++;
  g.s_star = next_id;
  g.t_star = next_id + 1;
  g.face_count = next_id + 2;

  g.left.resize(m);
  g.right.resize(m);
  for (int a = 0; a < m; ++a) {
    const int lf = face_of[2 * a];
    const int rf = face_of[2 * a + 1];
    g.left[a] = lf == outer ? g.s_star : remap[lf];
    g.right[a] = rf == outer ? g.t_star : remap[rf];
  }

  g.face_walk.assign(g.face_count, {});
  for (int f = 0; f < traced; ++f) {
    if (f == outer) continue;
    g.face_walk[remap[f]] = walks[f];
  }
  for (int h : walks[outer]) {
    if (backward(h))
      g.face_walk[g.t_star].push_back(h); // right-boundary arc seen against its direction
    else
      g.face_walk[g.s_star].push_back(h);
  }
  std::reverse(g.face_walk[g.t_star].begin(), g.face_walk[g.t_star].end());

  // Fan faces per vertex: the outgoing arcs must form one block in rotation
  // order (and so must the incoming ones); left(v) is left of the last
  // outgoing arc in counterclockwise order, right(v) is right of the last
  // incoming one.
  g.left_of_vertex.assign(n, -1);
  g.right_of_vertex.assign(n, -1);
  g.left_of_vertex[s] = g.s_star;
  g.right_of_vertex[s] = g.t_star;
  g.left_of_vertex[t] = g.s_star;
  g.right_of_vertex[t] = g.t_star;
  for (int v = 0; v < n; ++v) {
    if (v == s || v == t) continue;
    const auto& rot = emb.rotation[v];
    const int deg = static_cast<int>(rot.size());
    int out_to_in = 0, in_to_out = 0;
    int o_last = -1, i_last = -1;
    for (int k = 0; k < deg; ++k) {
      const bool cur_out = emb.arcs[rot[k]].first == v;
      const bool nxt_out = emb.arcs[rot[(k + 1) % deg]].first == v;
      if (cur_out && !nxt_out) {
        ++out_to_in;
        o_last = rot[k];
      } else if (!cur_out && nxt_out) {
        ++in_to_out;
        i_last = rot[k];
      }
    }
    if (out_to_in != 1 || in_to_out != 1)
      fail(Err::EmbeddingInconsistent,
           "in/out arcs not consecutive around vertex " + std::to_string(v));
    g.left_of_vertex[v] = g.left[o_last];
    g.right_of_vertex[v] = g.right[i_last];
  }

  return g;
}

DualStGraph dual_of(const PlaneStGraph& g) {
  DualStGraph d;
  d.vertex_count = g.face_count;
  d.s_star = g.s_star;
  d.t_star = g.t_star;
  d.dual_arc_of_primal.assign(g.m(), -1);
  for (int a = 0; a < g.m(); ++a) {
    const auto& [u, v] = g.emb.arcs[a];
    if (u == g.s && v == g.t) continue; // (s,t) arcs are skipped by definition
    d.dual_arc_of_primal[a] = static_cast<int>(d.arcs.size());
    d.arcs.emplace_back(g.left[a], g.right[a]);
    d.weights.push_back(1);
  }
  return d;
}

} // namespace bar1v
