#include "bar1v/numbering.hpp"

#include <vector>

#include "bar1v/error.hpp"

namespace bar1v {

Numbering weighted_topological_numbering(int vertex_count,
                                         const std::vector<std::pair<int, int>>& arcs,
                                         const std::vector<int>& weights) {
  if (weights.size() != arcs.size())
    fail(Err::InvalidParams, "one weight per arc required");
  for (size_t i = 0; i < arcs.size(); ++i) {
    const auto& [u, v] = arcs[i];
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      fail(Err::InvalidParams, "arc endpoint out of range");
    if (weights[i] < 0) fail(Err::InvalidParams, "negative weight");
  }

  std::vector<std::vector<int>> out(vertex_count);
  std::vector<int> indeg(vertex_count, 0);
  for (size_t i = 0; i < arcs.size(); ++i) {
    out[arcs[i].first].push_back(static_cast<int>(i));
    ++indeg[arcs[i].second];
  }

  // Kahn peeling with longest-path propagation; sources start at 0.
  Numbering value(vertex_count, 0);
  std::vector<int> stack;
  for (int v = 0; v < vertex_count; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int processed = 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    ++processed;
    for (int ai : out[u]) {
      const int v = arcs[ai].second;
      if (value[u] + weights[ai] > value[v]) value[v] = value[u] + weights[ai];
      if (--indeg[v] == 0) stack.push_back(v);
    }
  }
  if (processed != vertex_count) fail(Err::CycleDetected, "digraph has a cycle");
  return value;
}

Numbering unit_topological_numbering(int vertex_count,
                                     const std::vector<std::pair<int, int>>& arcs) {
  return weighted_topological_numbering(vertex_count, arcs,
                                        std::vector<int>(arcs.size(), 1));
}

} // namespace bar1v
