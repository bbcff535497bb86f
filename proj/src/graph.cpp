#include "bar1v/graph.hpp"

#include <algorithm>
#include <set>

#include "bar1v/error.hpp"

namespace bar1v {

namespace {
std::pair<int, int> norm(std::pair<int, int> e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  return e;
}
} // namespace

int Graph1Planar::edge_index(int u, int v) const {
  const auto key = norm({u, v});
  for (int i = 0; i < m(); ++i) {
    if (norm(edges[i]) == key) return i;
  }
  return -1;
}

std::vector<std::vector<int>> Graph1Planar::adjacency() const {
  std::vector<std::vector<int>> adj(vertex_count);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::vector<bool> Graph1Planar::crossing_edge_mask() const {
  std::vector<bool> mask(edges.size(), false);
  for (const auto& [a, b] : crossing_pairs) {
    mask[a] = true;
    mask[b] = true;
  }
  return mask;
}

void check_invariants(const Graph1Planar& g) {
  if (g.vertex_count < 0) fail_schema("n", "negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < g.m(); ++i) {
    const auto& [u, v] = g.edges[i];
    const std::string field = "edges[" + std::to_string(i) + "]";
    if (u < 0 || u >= g.vertex_count || v < 0 || v >= g.vertex_count)
      fail_schema(field, "endpoint out of range");
    if (u == v) fail_schema(field, "self-loop");
    if (!seen.insert(norm({u, v})).second) fail_schema(field, "duplicate edge");
  }
  std::vector<int> pair_uses(g.m(), 0);
  for (size_t i = 0; i < g.crossing_pairs.size(); ++i) {
    const auto& [a, b] = g.crossing_pairs[i];
    const std::string field = "crossings[" + std::to_string(i) + "]";
    if (a < 0 || a >= g.m() || b < 0 || b >= g.m())
      fail_schema(field, "edge index out of range");
    if (a == b) fail_schema(field, "pair of one edge");
    if (++pair_uses[a] > 1 || ++pair_uses[b] > 1)
      fail_schema(field, "edge appears in more than one crossing pair");
  }
  if (g.outer_order) {
    if (static_cast<int>(g.outer_order->size()) != g.vertex_count)
      fail_schema("outer_order", "length differs from vertex count");
    std::vector<bool> hit(g.vertex_count, false);
    for (int v : *g.outer_order) {
      if (v < 0 || v >= g.vertex_count) fail_schema("outer_order", "vertex out of range");
      if (hit[v]) fail_schema("outer_order", "repeated vertex");
      hit[v] = true;
    }
  }
  if (!g.labels.empty() && static_cast<int>(g.labels.size()) != g.vertex_count)
    fail_schema("labels", "length differs from vertex count");
}

} // namespace bar1v
