#include "bar1v/checker.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace bar1v {

const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::MissingBar: return "MissingBar";
    case ViolationKind::DuplicateBar: return "DuplicateBar";
    case ViolationKind::StrayBar: return "StrayBar";
    case ViolationKind::MissingSegment: return "MissingSegment";
    case ViolationKind::StraySegment: return "StraySegment";
    case ViolationKind::EndpointMismatch: return "EndpointMismatch";
    case ViolationKind::SegmentSpanMismatch: return "SegmentSpanMismatch";
    case ViolationKind::SegmentOffBar: return "SegmentOffBar";
    case ViolationKind::BarOverlap: return "BarOverlap";
    case ViolationKind::SegmentOverlap: return "SegmentOverlap";
  }
  return "Unknown";
}

int ValidationReport::max_crossing() const {
  int mx = 0;
  for (int c : crossing_count) mx = std::max(mx, c);
  return mx;
}

EdgeBounds edge_bound_report(const Graph1Planar& g) {
  EdgeBounds b;
  b.n = g.n();
  b.m = g.m();
  b.limit_1planar = 4 * b.n - 8;
  b.limit_bar1visible = 6 * b.n - 20;
  b.limit_rac = 4 * b.n - 10;
  b.applies_1planar = b.n >= 3;
  b.applies_bar1visible = b.n >= 5;
  b.applies_rac = b.n >= 4;
  b.within_1planar = b.applies_1planar && b.m <= b.limit_1planar;
  b.within_bar1visible = b.applies_bar1visible && b.m <= b.limit_bar1visible;
  b.within_rac = b.applies_rac && b.m <= b.limit_rac;
  b.optimal_1planar = b.applies_1planar && b.m == b.limit_1planar;
  return b;
}

ValidationReport validate(const Graph1Planar& g, const BarDrawing& d, int k) {
  ValidationReport rep;
  rep.k = k;
  rep.bounds = edge_bound_report(g);
  rep.crossing_count.assign(g.m(), 0);
  rep.crossed_bars.assign(g.m(), {});
  auto flag = [&](ViolationKind kind, int index, std::string detail) {
    rep.violations.push_back({kind, index, std::move(detail)});
  };

  // (a) vertex <-> bar bijection
  std::vector<int> bar_of(g.n(), -1);
  for (size_t i = 0; i < d.bars.size(); ++i) {
    const Bar& b = d.bars[i];
    if (b.vertex < 0 || b.vertex >= g.n()) {
      flag(ViolationKind::StrayBar, static_cast<int>(i),
           "bar for unknown vertex " + std::to_string(b.vertex));
      continue;
    }
    if (bar_of[b.vertex] != -1) {
      flag(ViolationKind::DuplicateBar, b.vertex, "vertex has two bars");
      continue;
    }
    if (b.x0 > b.x1)
      flag(ViolationKind::SegmentSpanMismatch, b.vertex, "bar with x0 > x1");
    bar_of[b.vertex] = static_cast<int>(i);
  }
  for (int v = 0; v < g.n(); ++v)
    if (bar_of[v] == -1) flag(ViolationKind::MissingBar, v, "vertex has no bar");

  // (a) edge <-> segment bijection plus (b) geometry per segment
  if (static_cast<int>(d.segments.size()) > g.m())
    flag(ViolationKind::StraySegment, -1,
         std::to_string(d.segments.size() - g.m()) + " segments beyond the edge count");
  for (int e = 0; e < g.m(); ++e) {
    if (e >= static_cast<int>(d.segments.size())) {
      flag(ViolationKind::MissingSegment, e, "edge has no segment");
      continue;
    }
    const Segment& s = d.segments[e];
    const auto [u, v] = g.edges[e];
    if (!((s.u == u && s.v == v) || (s.u == v && s.v == u))) {
      flag(ViolationKind::EndpointMismatch, e, "segment endpoints differ from the edge");
      continue;
    }
    if (bar_of[u] == -1 || bar_of[v] == -1) continue;
    const Bar& bu = d.bars[bar_of[u]];
    const Bar& bv = d.bars[bar_of[v]];
    const int ylo = std::min(bu.y, bv.y);
    const int yhi = std::max(bu.y, bv.y);
    if (s.y0 != ylo || s.y1 != yhi || ylo == yhi) {
      flag(ViolationKind::SegmentSpanMismatch, e,
           "segment does not span exactly between its endpoint bars");
      continue;
    }
    if (s.x < bu.x0 || s.x > bu.x1 || s.x < bv.x0 || s.x > bv.x1) {
      flag(ViolationKind::SegmentOffBar, e,
           "segment x=" + std::to_string(s.x) + " misses an endpoint bar");
      continue;
    }
  }

  // (c) crossings: non-endpoint bars strictly between the segment ends,
  // closed containment in x
  std::map<int, std::vector<int>> bars_by_row; // row -> bar indices
  for (size_t i = 0; i < d.bars.size(); ++i) bars_by_row[d.bars[i].y].push_back((int)i);
  for (int e = 0; e < g.m() && e < static_cast<int>(d.segments.size()); ++e) {
    const Segment& s = d.segments[e];
    auto it = bars_by_row.upper_bound(s.y0);
    for (; it != bars_by_row.end() && it->first < s.y1; ++it) {
      for (int bi : it->second) {
        const Bar& w = d.bars[bi];
        if (w.vertex == s.u || w.vertex == s.v) continue;
        if (s.x >= w.x0 && s.x <= w.x1) {
          ++rep.crossing_count[e];
          rep.crossed_bars[e].push_back(w.vertex);
        }
      }
    }
  }

  // (d) bars on one row must not overlap
  for (auto& [y, ids] : bars_by_row) {
    std::sort(ids.begin(), ids.end(),
              [&](int a, int b) { return d.bars[a].x0 < d.bars[b].x0; });
    for (size_t i = 0; i + 1 < ids.size(); ++i)
      if (d.bars[ids[i + 1]].x0 <= d.bars[ids[i]].x1)
        flag(ViolationKind::BarOverlap, d.bars[ids[i]].vertex,
             "bars of vertices " + std::to_string(d.bars[ids[i]].vertex) + " and " +
                 std::to_string(d.bars[ids[i + 1]].vertex) + " overlap on row " +
                 std::to_string(y));
  }

  // (e) segments on one column may only touch at a shared endpoint bar
  std::map<int, std::vector<int>> segs_by_col;
  for (size_t i = 0; i < d.segments.size(); ++i) segs_by_col[d.segments[i].x].push_back((int)i);
  for (auto& [x, ids] : segs_by_col) {
    std::sort(ids.begin(), ids.end(),
              [&](int a, int b) { return d.segments[a].y0 < d.segments[b].y0; });
    for (size_t i = 0; i + 1 < ids.size(); ++i)
      if (d.segments[ids[i + 1]].y0 < d.segments[ids[i]].y1)
        flag(ViolationKind::SegmentOverlap, ids[i],
             "segments " + std::to_string(ids[i]) + " and " + std::to_string(ids[i + 1]) +
                 " overlap on column " + std::to_string(x));
  }

  rep.pass = rep.violations.empty() && rep.max_crossing() <= k;
  return rep;
}

std::vector<int> brute_force_crossings(const BarDrawing& d) {
  std::vector<int> counts(d.segments.size(), 0);
  for (size_t i = 0; i < d.segments.size(); ++i) {
    const Segment& s = d.segments[i];
    for (const Bar& b : d.bars) {
      if (b.vertex == s.u || b.vertex == s.v) continue;
      if (b.y > s.y0 && b.y < s.y1 && s.x >= b.x0 && s.x <= b.x1) ++counts[i];
    }
  }
  return counts;
}

} // namespace bar1v
