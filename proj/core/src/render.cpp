// Copyright 2026 The Lozenge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lozenge/render.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace lozenge {

namespace {

// Lattice point in (doubled x, line) units.
struct Point {
  int hx;
  int line;
  auto operator<=>(const Point&) const = default;
};

std::array<Point, 3> corners(const TriangleCell& c) {
  if (c.orientation == Orientation::Up)
    return {Point{c.index - 1, c.layer + 1}, Point{c.index + 1, c.layer + 1}, Point{c.index, c.layer}};
  return {Point{c.index - 1, c.layer}, Point{c.index + 1, c.layer}, Point{c.index, c.layer + 1}};
}

// Shared edge and the two far apexes of an adjacent pair, as a quadrilateral.
std::array<Point, 4> lozenge_outline(const TriangleCell& a, const TriangleCell& b) {
  const auto ca = corners(a);
  const auto cb = corners(b);
  std::vector<Point> shared;
  Point far_a{}, far_b{};
  for (const auto& p : ca) {
    if (std::find(cb.begin(), cb.end(), p) != cb.end())
      shared.push_back(p);
    else
      far_a = p;
  }
  for (const auto& p : cb)
    if (std::find(ca.begin(), ca.end(), p) == ca.end()) far_b = p;
  return {far_a, shared.at(0), far_b, shared.at(1)};
}

std::pair<Point, Point> shared_edge(const EdgeKey& e) {
  const auto q = lozenge_outline(e.up, e.down);
  return {q[1], q[3]};
}

std::string label_of(const Region& region) {
  return region.label() ? describe(*region.label()) : std::string("region");
}

struct Bounds {
  int min_index = 0, max_index = 0, min_layer = 0, max_layer = 0;
};

Bounds bounds_of(const Region& region) {
  Bounds b;
  bool first = true;
  auto visit = [&](const TriangleCell& c) {
    if (first) {
      b = {c.index, c.index, c.layer, c.layer};
      first = false;
      return;
    }
    b.min_index = std::min(b.min_index, c.index);
    b.max_index = std::max(b.max_index, c.index);
    b.min_layer = std::min(b.min_layer, c.layer);
    b.max_layer = std::max(b.max_layer, c.layer);
  };
  for (const auto& c : region.cells()) visit(c);
  for (const auto& c : region.dents()) visit(c);
  return b;
}

bool is_vertical(const EdgeKey& e) { return e.up.index == e.down.index && e.down.layer == e.up.layer + 1; }

constexpr double kUnit = 24.0;  // edge length in px
constexpr double kMargin = 12.0;
const double kRowHeight = kUnit * std::sqrt(3.0) / 2.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

class Canvas {
 public:
  explicit Canvas(const Bounds& b) : b_(b) {}

  double x(const Point& p) const { return kMargin + (p.hx - (b_.min_index - 1)) * kUnit / 2.0; }
  double y(const Point& p) const { return kMargin + (p.line - b_.min_layer) * kRowHeight; }
  double width() const { return 2 * kMargin + (b_.max_index - b_.min_index + 2) * kUnit / 2.0; }
  double height() const { return 2 * kMargin + (b_.max_layer - b_.min_layer + 1) * kRowHeight; }

  template <class Points>
  std::string points(const Points& ps) const {
    std::string out;
    for (const auto& p : ps) {
      if (!out.empty()) out += ' ';
      out += fmt(x(p)) + ',' + fmt(y(p));
    }
    return out;
  }

  // Polygon shrunk toward its centroid by `factor`.
  std::string core(const std::array<Point, 4>& q, double factor) const {
    double cx = 0, cy = 0;
    for (const auto& p : q) {
      cx += x(p) / 4;
      cy += y(p) / 4;
    }
    std::string out;
    for (const auto& p : q) {
      if (!out.empty()) out += ' ';
      out += fmt(cx + (x(p) - cx) * factor) + ',' + fmt(cy + (y(p) - cy) * factor);
    }
    return out;
  }

 private:
  Bounds b_;
};

const char* lozenge_fill(LozengeKind kind) {
  switch (kind) {
    case LozengeKind::Vertical:
      return "#f2d98c";
    case LozengeKind::UpLeft:
      return "#9cc3e6";
    case LozengeKind::DownLeft:
      return "#e6a39c";
  }
  return "#ffffff";
}

}  // namespace

std::string render_ascii(const Region& region, const Tiling* tiling) {
  std::ostringstream os;
  os << label_of(region) << ": " << region.size() << " cells";
  if (tiling) os << ", tiling weight " << to_string(tiling->weight());
  os << '\n';
  if (region.empty() && region.dents().empty()) return os.str();

  const Bounds b = bounds_of(region);
  const int width = b.max_index - b.min_index + 1;
  const int rows = b.max_layer - b.min_layer + 1;
  std::vector<std::string> cell_rows(static_cast<std::size_t>(rows), std::string(width, ' '));
  std::vector<std::string> gap_rows(static_cast<std::size_t>(rows), std::string(width, ' '));
  auto at = [&](std::vector<std::string>& grid, int layer, int index) -> char& {
    return grid[static_cast<std::size_t>(layer - b.min_layer)][static_cast<std::size_t>(index - b.min_index)];
  };

  for (const auto& c : region.cells()) at(cell_rows, c.layer, c.index) = c.orientation == Orientation::Up ? '^' : 'v';
  for (const auto& c : region.dents()) at(cell_rows, c.layer, c.index) = '#';
  if (tiling) {
    for (std::size_t k = 0; k < tiling->placements.size(); ++k) {
      const auto& p = tiling->placements[k];
      char letter = static_cast<char>('a' + k % 26);
      if (p.weight != 1) letter = static_cast<char>(std::toupper(static_cast<unsigned char>(letter)));
      at(cell_rows, p.up.layer, p.up.index) = letter;
      at(cell_rows, p.down.layer, p.down.index) = letter;
    }
  } else {
    for (const auto& [e, w] : region.weight_overrides())
      if (is_vertical(e) && w != 1) at(gap_rows, e.up.layer, e.up.index) = ':';
  }
  for (const auto& e : region.barred_edges())
    if (is_vertical(e)) at(gap_rows, e.up.layer, e.up.index) = '=';

  auto trimmed = [](std::string s) {
    s.erase(s.find_last_not_of(' ') + 1);
    return s;
  };
  for (int r = 0; r < rows; ++r) {
    os << trimmed(cell_rows[static_cast<std::size_t>(r)]) << '\n';
    const std::string gap = trimmed(gap_rows[static_cast<std::size_t>(r)]);
    if (!gap.empty() && r + 1 < rows) os << gap << '\n';
  }
  return os.str();
}

std::string render_svg(const Region& region, const Tiling* tiling) {
  const Bounds b = bounds_of(region);
  const Canvas cv(b);
  std::ostringstream os;
  std::string title = label_of(region) + ": " + std::to_string(region.size()) + " cells";
  if (tiling) title += ", tiling weight " + to_string(tiling->weight());

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(cv.width())
     << "\" height=\"" << fmt(cv.height()) << "\" viewBox=\"0 0 " << fmt(cv.width()) << ' '
     << fmt(cv.height()) << "\">\n"
     << "<title>" << title << "</title>\n";

  os << "<g id=\"cells\" fill=\"#ffffff\" stroke=\"#9a9a9a\" stroke-width=\"0.6\">\n";
  for (const auto& c : region.cells()) os << "<polygon points=\"" << cv.points(corners(c)) << "\"/>\n";
  os << "</g>\n";

  os << "<g id=\"dents\" fill=\"#b4b4b4\" stroke=\"#707070\" stroke-width=\"0.6\">\n";
  for (const auto& c : region.dents()) os << "<polygon points=\"" << cv.points(corners(c)) << "\"/>\n";
  os << "</g>\n";

  if (tiling) {
    os << "<g id=\"tiling\" stroke=\"#303030\" stroke-width=\"1.2\">\n";
    for (const auto& p : tiling->placements)
      os << "<polygon fill=\"" << lozenge_fill(p.kind()) << "\" points=\""
         << cv.points(lozenge_outline(p.up, p.down)) << "\"/>\n";
    os << "</g>\n";
  }

  // Shaded cores: chosen lozenges in a tiling, every weighted position otherwise.
  os << "<g id=\"weights\" fill=\"#5a5a5a\" fill-opacity=\"0.45\" stroke=\"none\">\n";
  if (tiling) {
    for (const auto& p : tiling->placements)
      if (p.weight != 1) os << "<polygon points=\"" << cv.core(lozenge_outline(p.up, p.down), 0.35) << "\"/>\n";
  } else {
    for (const auto& [e, w] : region.weight_overrides())
      if (w != 1 && region.contains(e.up) && region.contains(e.down))
        os << "<polygon points=\"" << cv.core(lozenge_outline(e.up, e.down), 0.35) << "\"/>\n";
  }
  os << "</g>\n";

  os << "<g id=\"barriers\" stroke=\"#000000\" stroke-width=\"4\" stroke-linecap=\"round\">\n";
  for (const auto& e : region.barred_edges()) {
    const auto [p, q] = shared_edge(e);
    os << "<line x1=\"" << fmt(cv.x(p)) << "\" y1=\"" << fmt(cv.y(p)) << "\" x2=\"" << fmt(cv.x(q))
       << "\" y2=\"" << fmt(cv.y(q)) << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace lozenge
