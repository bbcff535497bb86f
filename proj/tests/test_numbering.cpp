#include <doctest.h>

#include <random>

#include "bar1v/error.hpp"
#include "bar1v/numbering.hpp"

using namespace bar1v;

namespace {

// Independent oracle: exhaustive DFS over all source-to-v paths.
int longest_to(int target, int vertex_count, const std::vector<std::pair<int, int>>& arcs,
               const std::vector<int>& weights) {
  std::vector<std::vector<int>> in(vertex_count);
  for (size_t i = 0; i < arcs.size(); ++i) in[arcs[i].second].push_back(static_cast<int>(i));
  // longest path ending at target, enumerated backwards
  int best = 0;
  auto dfs = [&](auto&& self, int v, int acc) -> void {
    if (acc > best) best = acc;
    for (int ai : in[v]) self(self, arcs[ai].first, acc + weights[ai]);
  };
  dfs(dfs, target, 0);
  return best;
}

} // namespace

TEST_CASE("unit numbering of a path") {
  const std::vector<std::pair<int, int>> arcs{{0, 1}, {1, 2}};
  const Numbering v = unit_topological_numbering(3, arcs);
  CHECK(v == Numbering{0, 1, 2});
}

TEST_CASE("single vertex numbers to zero") {
  const Numbering v = unit_topological_numbering(1, {});
  CHECK(v == Numbering{0});
}

TEST_CASE("cycle detection") {
  const std::vector<std::pair<int, int>> arcs{{0, 1}, {1, 2}, {2, 0}};
  CHECK_THROWS_AS(unit_topological_numbering(3, arcs), Error);
  try {
    unit_topological_numbering(3, arcs);
  } catch (const Error& e) {
    CHECK(e.code() == Err::CycleDetected);
  }
}

TEST_CASE("weighted constraint holds on every arc") {
  const std::vector<std::pair<int, int>> arcs{{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 2}};
  const std::vector<int> w{2, 0, 1, 5, 3};
  const Numbering v = weighted_topological_numbering(4, arcs, w);
  for (size_t i = 0; i < arcs.size(); ++i)
    CHECK(v[arcs[i].second] >= v[arcs[i].first] + w[i]);
  CHECK(v[0] == 0);
}

TEST_CASE("values equal brute-force longest paths on random small dags") {
  std::mt19937 rng(20240817);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 11); // <= 12 vertices
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> weights;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) {
          arcs.emplace_back(u, v); // increasing ids keep it acyclic
          weights.push_back(static_cast<int>(rng() % 4));
        }
    const Numbering got = weighted_topological_numbering(n, arcs, weights);
    for (int v = 0; v < n; ++v) CHECK(got[v] == longest_to(v, n, arcs, weights));
  }
}
