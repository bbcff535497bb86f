#pragma once

#include <utility>
#include <vector>

namespace bar1v {

// value[v] >= value[u] + weight(u,v) for every arc (u,v).
using Numbering = std::vector<int>;

// Optimal weighted topological numbering: every source gets 0 and value[v] is
// the longest weighted path from a source to v, which minimizes the range.
// Throws Error(CycleDetected) if the digraph has a cycle.
Numbering weighted_topological_numbering(int vertex_count,
                                         const std::vector<std::pair<int, int>>& arcs,
                                         const std::vector<int>& weights);

// Unit weights on every arc.
Numbering unit_topological_numbering(int vertex_count,
                                     const std::vector<std::pair<int, int>>& arcs);

} // namespace bar1v
