#pragma once

#include <string>
#include <vector>

#include "bar1v/drawing.hpp"
#include "bar1v/graph.hpp"

namespace bar1v {

enum class ViolationKind {
  MissingBar,
  DuplicateBar,
  StrayBar,
  MissingSegment,
  StraySegment,
  EndpointMismatch,
  SegmentSpanMismatch,
  SegmentOffBar,
  BarOverlap,
  SegmentOverlap,
};

const char* to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  int index = -1; // offending edge/vertex index when applicable
  std::string detail;
};

struct EdgeBounds {
  int n = 0;
  int m = 0;
  int limit_1planar = 0;     // 4n-8
  int limit_bar1visible = 0; // 6n-20
  int limit_rac = 0;         // 4n-10
  bool applies_1planar = false;     // n >= 3
  bool applies_bar1visible = false; // n >= 5
  bool applies_rac = false;         // n >= 4
  bool within_1planar = false;
  bool within_bar1visible = false;
  bool within_rac = false;
  bool optimal_1planar = false; // m == 4n-8 exactly
};

struct ValidationReport {
  bool pass = false;
  int k = 1;
  std::vector<int> crossing_count;            // per edge
  std::vector<std::vector<int>> crossed_bars; // per edge: vertices crossed
  std::vector<Violation> violations;
  EdgeBounds bounds;

  int max_crossing() const;
};

// Geometric validator for bar k-visibility. Total: every problem becomes a
// violation entry, never an exception. verdict passes iff there are no
// violations and every segment crosses at most k non-endpoint bars
// (strict y-betweenness, closed x-containment).
ValidationReport validate(const Graph1Planar& g, const BarDrawing& d, int k);

EdgeBounds edge_bound_report(const Graph1Planar& g);

// Independent oracle: exhaustive pairwise segment-versus-bar tests with no
// indexing shortcuts. Returns one count per segment.
std::vector<int> brute_force_crossings(const BarDrawing& d);

} // namespace bar1v
