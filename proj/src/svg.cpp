#include "polybn/svg.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace polybn {

namespace {

constexpr Int kCell = 150;     // drawing area, px
constexpr Int kCaption = 34;   // caption strip below each drawing, px
constexpr Int kGap = 10;
constexpr Int kMargin = 20;
constexpr Int kTitle = 34;
constexpr int kColumns = 4;

struct Cell {
  Polygon polygon;
  std::string line1;
  std::string line2;
};

void draw_cell(std::ostringstream& out, const Cell& cell, Int x0, Int y0) {
  const Polygon& p = cell.polygon;
  Int minx = p.vertices().front().x, maxx = minx;
  Int miny = p.vertices().front().y, maxy = miny;
  for (const auto& v : p.vertices()) {
    minx = std::min(minx, v.x);
    maxx = std::max(maxx, v.x);
    miny = std::min(miny, v.y);
    maxy = std::max(maxy, v.y);
  }
  const Int span = std::max({maxx - minx, maxy - miny, Int(1)});
  // Integer scale keeps every emitted coordinate integral, so the
  // output bytes cannot drift between runs or platforms.
  const Int scale = std::min<Int>(20, (kCell - 30) / (span + 2));
  const Int ox = x0 + (kCell - scale * (maxx - minx)) / 2 - scale * minx;
  const Int oy = y0 + (kCell - scale * (maxy - miny)) / 2 + scale * maxy;
  auto sx = [&](Int x) { return ox + scale * x; };
  auto sy = [&](Int y) { return oy - scale * y; };  // SVG y grows downward

  out << "<rect x='" << x0 << "' y='" << y0 << "' width='" << kCell
      << "' height='" << kCell << "' fill='none' stroke='#dddddd'/>\n";
  for (Int gx = minx - 1; gx <= maxx + 1; ++gx)
    for (Int gy = miny - 1; gy <= maxy + 1; ++gy)
      out << "<circle cx='" << sx(gx) << "' cy='" << sy(gy)
          << "' r='1' fill='#bbbbbb'/>\n";

  const auto& verts = p.vertices();
  if (p.dim() == 2) {
    out << "<path d='";
    for (std::size_t i = 0; i < verts.size(); ++i)
      out << (i == 0 ? 'M' : 'L') << sx(verts[i].x) << ' ' << sy(verts[i].y);
    out << "Z' fill='#4d7fb3' fill-opacity='0.18' stroke='#2d5f93' "
           "stroke-width='1.5'/>\n";
  } else if (p.dim() == 1) {
    out << "<line x1='" << sx(verts.front().x) << "' y1='" << sy(verts.front().y)
        << "' x2='" << sx(verts.back().x) << "' y2='" << sy(verts.back().y)
        << "' stroke='#2d5f93' stroke-width='1.5'/>\n";
  }
  for (const auto& q : p.lattice_points())
    out << "<circle cx='" << sx(q.x) << "' cy='" << sy(q.y)
        << "' r='3' fill='#2d5f93'/>\n";
  for (const auto& q : p.interior_lattice_points())
    out << "<circle cx='" << sx(q.x) << "' cy='" << sy(q.y)
        << "' r='3' fill='#c24d3a'/>\n";

  out << "<text x='" << x0 + kCell / 2 << "' y='" << y0 + kCell + 14
      << "' text-anchor='middle' font-family='monospace' font-size='11' "
         "fill='#222222'>"
      << cell.line1 << "</text>\n";
  out << "<text x='" << x0 + kCell / 2 << "' y='" << y0 + kCell + 28
      << "' text-anchor='middle' font-family='monospace' font-size='11' fill='"
      << (cell.line2 == "admissible" ? "#1d6b35" : "#a03030") << "'>"
      << cell.line2 << "</text>\n";
}

}  // namespace

std::string render_classification_sheet(unsigned threads, Int max_genus) {
  std::vector<Cell> cells;
  for (const auto& v : classify_interior_polygons(max_genus, threads)) {
    if (!v.admissible && v.reason != Reason::kPlaneQuinticRule) continue;
    cells.push_back({v.polygon_class.representative,
                     "genus " + std::to_string(v.genus) + ", width " +
                         std::to_string(v.polygon_class.lw),
                     reason_tag(v.reason)});
  }
  for (const auto& v : verify_midrange(10, threads).verdicts)
    if (v.reason == Reason::kGenus10Clifford)
      cells.push_back({v.polygon_class.representative,
                       "genus " + std::to_string(v.genus) + ", width " +
                           std::to_string(v.polygon_class.lw),
                       reason_tag(v.reason)});

  const int rows = (static_cast<int>(cells.size()) + kColumns - 1) / kColumns;
  const Int width = 2 * kMargin + kColumns * kCell + (kColumns - 1) * kGap;
  const Int height = kTitle + 2 * kMargin + rows * (kCell + kCaption) + (rows - 1) * kGap;

  std::ostringstream out;
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width
      << "' height='" << height << "' viewBox='0 0 " << width << ' ' << height
      << "'>\n";
  out << "<rect width='" << width << "' height='" << height
      << "' fill='#ffffff'/>\n";
  out << "<text x='" << width / 2 << "' y='" << kMargin + 8
      << "' text-anchor='middle' font-family='monospace' font-size='15' "
         "fill='#222222'>Interior lattice polygons: admissible classes and "
         "named exclusions</text>\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Int col = static_cast<Int>(i) % kColumns;
    const Int row = static_cast<Int>(i) / kColumns;
    draw_cell(out, cells[i], kMargin + col * (kCell + kGap),
              kTitle + kMargin + row * (kCell + kCaption + kGap));
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace polybn
