#pragma once

#include <vector>

namespace bar1v {

// Integer grid geometry. x grows rightward, y grows upward; drawings are
// normalized so the bounding box starts at (0,0).
struct Bar {
  int vertex = 0;
  int y = 0;
  int x0 = 0;
  int x1 = 0; // x0 <= x1; x0 == x1 is a degenerate (point) bar
};

struct Segment {
  int u = 0;
  int v = 0;
  int x = 0;
  int y0 = 0;
  int y1 = 0; // y0 < y1
};

struct BarDrawing {
  std::vector<Bar> bars;
  std::vector<Segment> segments;

  bool empty() const { return bars.empty() && segments.empty(); }

  int min_x() const;
  int max_x() const;
  int min_y() const;
  int max_y() const;

  /// Number of occupied grid columns (0 for an empty drawing).
  int width() const;
  /// Number of occupied grid rows.
  int height() const;

  /// Shift so that min_x == 0 and min_y == 0.
  void normalize();
};

} // namespace bar1v
