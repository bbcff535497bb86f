#include "bar1v/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "bar1v/error.hpp"

namespace bar1v {

namespace {

std::pair<int, int> norm(int u, int v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }

int push_edge(Graph1Planar& g, int u, int v) {
  g.edges.emplace_back(u, v);
  return g.m() - 1;
}

} // namespace

Graph1Planar gen_diagonal_grid(DiagonalGridParams params) {
  const int p = params.p, q = params.q;
  if (p < 2 || q < 2) fail(Err::InvalidParams, "diagonal grid needs p >= 2 and q >= 2");

  Graph1Planar g;
  g.vertex_count = p * q;
  const auto id = [q](int i, int j) { return (i - 1) * q + (j - 1); }; // 1-based row/col
  g.labels.resize(g.vertex_count);
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= q; ++j)
      g.labels[id(i, j)] = "v" + std::to_string(i) + "," + std::to_string(j);

  for (int i = 1; i <= p; ++i)
    for (int j = 1; j < q; ++j) push_edge(g, id(i, j), id(i, j + 1));
  for (int i = 1; i < p; ++i)
    for (int j = 1; j <= q; ++j) push_edge(g, id(i, j), id(i + 1, j));
  for (int i = 1; i < p; ++i)
    for (int j = 1; j < q; ++j) {
      // cell corners: a bottom-left, b bottom-right, c up-right, d up-left
      const int rd = push_edge(g, id(i, j), id(i + 1, j + 1));     // right-diagonal (a,c)
      const int ld = push_edge(g, id(i, j + 1), id(i + 1, j));     // left-diagonal (b,d)
      g.crossing_pairs.emplace_back(rd, ld);
    }
  return g;
}

Graph1Planar gen_recursive_quadrangle(RecursiveQuadrangleParams params) {
  if (params.depth < 0) fail(Err::InvalidParams, "depth must be >= 0");
  const int rings = params.depth + 2; // inner K4 ring plus depth+1 shells

  Graph1Planar g;
  g.vertex_count = 4 * rings;
  g.labels.resize(g.vertex_count);
  const auto a = [](int r) { return 4 * r; };
  const auto b = [](int r) { return 4 * r + 1; };
  const auto c = [](int r) { return 4 * r + 2; };
  const auto d = [](int r) { return 4 * r + 3; };
  for (int r = 0; r < rings; ++r) {
    g.labels[a(r)] = "a" + std::to_string(r);
    g.labels[b(r)] = "b" + std::to_string(r);
    g.labels[c(r)] = "c" + std::to_string(r);
    g.labels[d(r)] = "d" + std::to_string(r);
  }

  // innermost ring: rectangle plus crossing diagonals
  push_edge(g, a(0), b(0));
  push_edge(g, b(0), c(0));
  push_edge(g, c(0), d(0));
  push_edge(g, d(0), a(0));
  const int diag1 = push_edge(g, a(0), c(0));
  const int diag2 = push_edge(g, b(0), d(0));
  g.crossing_pairs.emplace_back(diag1, diag2);

  for (int r = 1; r < rings; ++r) {
    push_edge(g, a(r), b(r));
    push_edge(g, b(r), c(r));
    push_edge(g, c(r), d(r));
    push_edge(g, d(r), a(r));
    push_edge(g, a(r - 1), a(r));
    push_edge(g, b(r - 1), b(r));
    push_edge(g, c(r - 1), c(r));
    push_edge(g, d(r - 1), d(r));
    // two crossing edges per side quadrangle of the ring gap
    const int ab1 = push_edge(g, a(r - 1), b(r));
    const int ab2 = push_edge(g, b(r - 1), a(r));
    g.crossing_pairs.emplace_back(ab1, ab2);
    const int bc1 = push_edge(g, b(r - 1), c(r));
    const int bc2 = push_edge(g, c(r - 1), b(r));
    g.crossing_pairs.emplace_back(bc1, bc2);
    const int cd1 = push_edge(g, c(r - 1), d(r));
    const int cd2 = push_edge(g, d(r - 1), c(r));
    g.crossing_pairs.emplace_back(cd1, cd2);
    const int da1 = push_edge(g, d(r - 1), a(r));
    const int da2 = push_edge(g, a(r - 1), d(r));
    g.crossing_pairs.emplace_back(da1, da2);
  }

  if (params.optimal) {
    const int last = rings - 1;
    const int o1 = push_edge(g, a(last), c(last));
    const int o2 = push_edge(g, b(last), d(last));
    g.crossing_pairs.emplace_back(o1, o2);
  }
  return g;
}

Graph1Planar gen_pseudo_double_wheel_even(int n) {
  if (n < 3) fail(Err::InvalidParams, "pseudo double wheel needs n >= 3");

  Graph1Planar g;
  g.vertex_count = 2 * n + 2;
  const auto v = [](int i) { return 2 * (i - 1); };     // 1-based
  const auto u = [](int i) { return 2 * (i - 1) + 1; };
  const int x = 2 * n;
  const int y = 2 * n + 1;
  g.labels.resize(g.vertex_count);
  for (int i = 1; i <= n; ++i) {
    g.labels[v(i)] = "v" + std::to_string(i);
    g.labels[u(i)] = "u" + std::to_string(i);
  }
  g.labels[x] = "x";
  g.labels[y] = "y";

  const auto nxt = [n](int i) { return i == n ? 1 : i + 1; };
  for (int i = 1; i <= n; ++i) {
    push_edge(g, v(i), u(i));
    push_edge(g, u(i), v(nxt(i)));
  }
  for (int i = 1; i <= n; ++i) push_edge(g, x, u(i));
  for (int i = 1; i <= n; ++i) push_edge(g, y, v(i));
  for (int i = 1; i <= n; ++i) {
    // inner face y, v_i, u_i, v_{i+1}
    const int e1 = push_edge(g, y, u(i));
    const int e2 = push_edge(g, v(i), v(nxt(i)));
    g.crossing_pairs.emplace_back(e1, e2);
  }
  for (int i = 1; i <= n; ++i) {
    // outer face x, u_i, v_{i+1}, u_{i+1}
    const int e1 = push_edge(g, x, v(nxt(i)));
    const int e2 = push_edge(g, u(i), u(nxt(i)));
    g.crossing_pairs.emplace_back(e1, e2);
  }
  return g;
}

namespace {

// Structural match against the canonical even wheel: same vertex indexing,
// same edge set, same crossing pairs (as unordered pairs of unordered edges).
int even_pdw_half_cycle(const Graph1Planar& g) {
  if (g.vertex_count < 8 || g.vertex_count % 2 != 0) return -1;
  const int n = (g.vertex_count - 2) / 2;
  const Graph1Planar ref = gen_pseudo_double_wheel_even(n);
  if (g.m() != ref.m()) return -1;
  std::set<std::pair<int, int>> have, want;
  for (const auto& [a, b] : g.edges) have.insert(norm(a, b));
  for (const auto& [a, b] : ref.edges) want.insert(norm(a, b));
  if (have != want) return -1;
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> hp, wp;
  const auto pair_key = [](const Graph1Planar& gr, std::pair<int, int> pr) {
    auto e1 = norm(gr.edges[pr.first].first, gr.edges[pr.first].second);
    auto e2 = norm(gr.edges[pr.second].first, gr.edges[pr.second].second);
    return e1 < e2 ? std::pair{e1, e2} : std::pair{e2, e1};
  };
  for (auto pr : g.crossing_pairs) hp.insert(pair_key(g, pr));
  for (auto pr : ref.crossing_pairs) wp.insert(pair_key(ref, pr));
  return hp == wp ? n : -1;
}

// Rotation of a vertex in the canonical even-wheel embedding.
std::vector<int> even_pdw_rotation(int n, int w) {
  const auto v = [](int i) { return 2 * (i - 1); };
  const auto u = [](int i) { return 2 * (i - 1) + 1; };
  const int x = 2 * n, y = 2 * n + 1;
  const auto nxt = [n](int i) { return i == n ? 1 : i + 1; };
  const auto prv = [n](int i) { return i == 1 ? n : i - 1; };
  std::vector<int> rot;
  if (w == y) {
    for (int i = 1; i <= n; ++i) {
      rot.push_back(v(i));
      rot.push_back(u(i));
    }
  } else if (w == x) {
    for (int i = 1; i <= n; ++i) {
      rot.push_back(u(i));
      rot.push_back(v(nxt(i)));
    }
  } else if (w % 2 == 0) {
    const int i = w / 2 + 1; // w == v(i)
    rot = {x, u(i), v(nxt(i)), y, v(prv(i)), u(prv(i))};
  } else {
    const int i = (w - 1) / 2 + 1; // w == u(i)
    rot = {v(i), y, v(nxt(i)), u(nxt(i)), x, u(prv(i))};
  }
  return rot;
}

} // namespace

Graph1Planar qv_split(const Graph1Planar& g, int v1) {
  if (v1 < 0 || v1 >= g.vertex_count) fail(Err::InvalidParams, "split vertex out of range");

  const int n = even_pdw_half_cycle(g);
  std::vector<int> rot;
  if (n > 0) {
    rot = even_pdw_rotation(n, v1);
  } else {
    // Neighbor scan still runs so that inputs whose candidate pairs are all
    // adjacent report NoValidSplitPair; anything else is rejected.
    for (int w = 0; w < g.vertex_count; ++w)
      if (w != v1 && g.has_edge(v1, w)) rot.push_back(w);
  }
  if (rot.size() < 2) fail(Err::NoValidSplitPair, "split vertex has fewer than two neighbors");

  int pi = -1, pj = -1;
  for (size_t i = 0; i < rot.size() && pi < 0; ++i)
    for (size_t j = i + 1; j < rot.size(); ++j)
      if (!g.has_edge(rot[i], rot[j])) {
        pi = static_cast<int>(i);
        pj = static_cast<int>(j);
        break;
      }
  if (pi < 0)
    fail(Err::NoValidSplitPair, "every neighbor pair of the split vertex is adjacent");
  if (n <= 0) fail(Err::InvalidParams, "input is not an even pseudo double wheel");

  const int v2 = rot[pi];
  const int v3 = rot[pj];

  // Neighbors on the rotation arc v2..v3 stay with v1, the rest move to v4.
  std::vector<bool> stays(g.vertex_count, false);
  for (int k = pi; k <= pj; ++k) stays[rot[k]] = true;

  Graph1Planar out = g;
  const int v4 = out.vertex_count++;
  if (!out.labels.empty()) {
    std::string base = out.labels[v1];
    out.labels.push_back(base + "'");
  }
  for (auto& [a, b] : out.edges) {
    if (a == v1 && !stays[b]) a = v4;
    if (b == v1 && !stays[a]) b = v4;
  }
  const int e_split = push_edge(out, v1, v4);
  const int e_pair = push_edge(out, v2, v3);
  push_edge(out, v4, v2);
  push_edge(out, v4, v3);
  out.crossing_pairs.emplace_back(e_split, e_pair);
  return out;
}

Graph1Planar gen_pseudo_double_wheel_odd(int n) {
  if (n < 3) fail(Err::InvalidParams, "pseudo double wheel needs n >= 3");
  Graph1Planar even = gen_pseudo_double_wheel_even(n);
  const int hub_y = 2 * n + 1;
  Graph1Planar odd = qv_split(even, hub_y);
  odd.labels[odd.vertex_count - 1] = "z";
  return odd;
}

Graph1Planar gen_pseudo_double_wheel(PseudoDoubleWheelParams params) {
  return params.parity == PseudoDoubleWheelParams::Parity::Even
             ? gen_pseudo_double_wheel_even(params.n)
             : gen_pseudo_double_wheel_odd(params.n);
}

Graph1Planar gen_quadrangle_chain(int k) {
  if (k < 1) fail(Err::InvalidParams, "chain needs k >= 1 quadrangles");

  Graph1Planar g;
  g.vertex_count = 2 * k + 2;
  const auto top = [](int i) { return i; };            // T_0..T_k
  const auto bot = [k](int i) { return k + 1 + i; };   // B_0..B_k
  g.labels.resize(g.vertex_count);
  for (int i = 0; i <= k; ++i) {
    g.labels[top(i)] = "t" + std::to_string(i);
    g.labels[bot(i)] = "b" + std::to_string(i);
  }

  for (int i = 1; i <= k; ++i) push_edge(g, top(i - 1), top(i));
  for (int i = 1; i <= k; ++i) push_edge(g, bot(i - 1), bot(i));
  for (int i = 0; i <= k; ++i) push_edge(g, top(i), bot(i));
  for (int i = 1; i <= k; ++i) {
    const int d1 = push_edge(g, top(i - 1), bot(i));
    const int d2 = push_edge(g, top(i), bot(i - 1));
    g.crossing_pairs.emplace_back(d1, d2);
  }

  // counterclockwise hull: down the left side, along the bottom, up the right
  std::vector<int> order;
  order.push_back(top(0));
  for (int i = 0; i <= k; ++i) order.push_back(bot(i));
  for (int i = k; i >= 1; --i) order.push_back(top(i));
  g.outer_order = order;
  return g;
}

} // namespace bar1v
