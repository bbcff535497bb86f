#include "bar1v/drawing.hpp"

#include <algorithm>
#include <limits>

namespace bar1v {

namespace {
constexpr int kIntMax = std::numeric_limits<int>::max();
constexpr int kIntMin = std::numeric_limits<int>::min();
} // namespace

int BarDrawing::min_x() const {
  int v = kIntMax;
  for (const auto& b : bars) v = std::min(v, b.x0);
  for (const auto& s : segments) v = std::min(v, s.x);
  return v == kIntMax ? 0 : v;
}

int BarDrawing::max_x() const {
  int v = kIntMin;
  for (const auto& b : bars) v = std::max(v, b.x1);
  for (const auto& s : segments) v = std::max(v, s.x);
  return v == kIntMin ? 0 : v;
}

int BarDrawing::min_y() const {
  int v = kIntMax;
  for (const auto& b : bars) v = std::min(v, b.y);
  for (const auto& s : segments) v = std::min(v, s.y0);
  return v == kIntMax ? 0 : v;
}

int BarDrawing::max_y() const {
  int v = kIntMin;
  for (const auto& b : bars) v = std::max(v, b.y);
  for (const auto& s : segments) v = std::max(v, s.y1);
  return v == kIntMin ? 0 : v;
}

int BarDrawing::width() const { return empty() ? 0 : max_x() - min_x() + 1; }

int BarDrawing::height() const { return empty() ? 0 : max_y() - min_y() + 1; }

void BarDrawing::normalize() {
  if (empty()) return;
  const int dx = -min_x();
  const int dy = -min_y();
  if (dx == 0 && dy == 0) return;
  for (auto& b : bars) {
    b.x0 += dx;
    b.x1 += dx;
    b.y += dy;
  }
  for (auto& s : segments) {
    s.x += dx;
    s.y0 += dy;
    s.y1 += dy;
  }
}

} // namespace bar1v
