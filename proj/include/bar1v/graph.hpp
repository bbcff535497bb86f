#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bar1v {

// Undirected graph with optional 1-planar annotations.
// crossing_pairs holds pairs of edge indices; an edge index may appear in at
// most one pair. outer_order, when present, lists all vertices in
// counterclockwise order along the outer face.
struct Graph1Planar {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> crossing_pairs;
  std::optional<std::vector<int>> outer_order;
  std::vector<std::string> labels; // empty, or one name per vertex

  int n() const { return vertex_count; }
  int m() const { return static_cast<int>(edges.size()); }

  /// Index of the undirected edge {u,v}, or -1.
  int edge_index(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

  std::vector<std::vector<int>> adjacency() const;

  /// true for each edge that belongs to some crossing pair.
  std::vector<bool> crossing_edge_mask() const;
};

// Throws Error(SchemaViolation) on any violated invariant: self-loops,
// duplicate edges, out-of-range indices, an edge in two crossing pairs,
// or an outer_order that is not a permutation of the vertices.
void check_invariants(const Graph1Planar& g);

} // namespace bar1v
