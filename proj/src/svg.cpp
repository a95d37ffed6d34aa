#include "hs/svg.hpp"

#include <cstdio>
#include <sstream>

namespace hs {

namespace {

const char* kClassColors[] = {"#1b9e77", "#d95f02", "#7570b3",
                              "#e7298a", "#66a61e", "#e6ab02"};

std::string num(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.9g", v);
  return buffer;
}

// SVG y grows downward; flip about the box midline.
struct Frame {
  Box2 box;
  double flip(double y) const { return box.lo.y + box.hi.y - y; }
};

void emit_region(std::ostringstream& out, const RasterSummary& region,
                 const Frame& frame, const char* color, double opacity) {
  const GridSpec& g = region.grid;
  out << "<g fill=\"" << color << "\" fill-opacity=\"" << num(opacity)
      << "\" stroke=\"none\">\n";
  for (const auto& row : region.rows) {
    const double x = g.min_corner.x + row[1] * g.cell;
    const double w = (row[2] - row[1] + 1) * g.cell;
    const double y_top = g.min_corner.y + (row[0] + 1) * g.cell;
    out << "<rect x=\"" << num(x) << "\" y=\"" << num(frame.flip(y_top))
        << "\" width=\"" << num(w) << "\" height=\"" << num(g.cell)
        << "\"/>\n";
  }
  out << "</g>\n";
}

void emit_boundary(std::ostringstream& out, const BoundaryFile& boundary,
                   const Frame& frame, double marker) {
  out << "<g stroke=\"#222222\" stroke-width=\"" << num(marker / 3.0)
      << "\" fill=\"#222222\">\n";
  for (const BoundaryEntry& e : boundary.entries) {
    if (e.kind == BoundaryEntry::Kind::points) {
      for (const Point2& p : e.data) {
        out << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(frame.flip(p.y))
            << "\" r=\"" << num(marker) << "\"/>\n";
      }
    } else if (e.kind == BoundaryEntry::Kind::segment) {
      out << "<line x1=\"" << num(e.data[0].x) << "\" y1=\""
          << num(frame.flip(e.data[0].y)) << "\" x2=\"" << num(e.data[1].x)
          << "\" y2=\"" << num(frame.flip(e.data[1].y)) << "\"/>\n";
    } else {
      out << "<polygon fill=\"none\" points=\"";
      for (std::size_t i = 0; i < e.data.size(); ++i) {
        if (i) out << " ";
        out << num(e.data[i].x) << "," << num(frame.flip(e.data[i].y));
      }
      out << "\"/>\n";
    }
  }
  out << "</g>\n";
}

}  // namespace

std::string render_solution_svg(const ResultFile& result) {
  const Frame frame{result.grid.box()};
  const Box2& box = frame.box;
  const double marker = 1.2 * result.grid.cell * 2.0;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "width=\"720\" height=\"720\" viewBox=\"" << num(box.lo.x) << " "
      << num(box.lo.y) << " " << num(box.width()) << " " << num(box.height())
      << "\">\n"
      << "<rect x=\"" << num(box.lo.x) << "\" y=\"" << num(box.lo.y)
      << "\" width=\"" << num(box.width()) << "\" height=\""
      << num(box.height()) << "\" fill=\"#ffffff\"/>\n";

  // Class regions first, best region on top of them.
  for (std::size_t i = 0; i < result.classes.size(); ++i) {
    const char* color = kClassColors[i % (sizeof(kClassColors) /
                                          sizeof(kClassColors[0]))];
    emit_region(out, result.classes[i].maximal, frame, color, 0.35);
  }
  emit_region(out, result.maximal, frame, "#1b9e77", 0.8);

  emit_boundary(out, result.boundary, frame, marker);

  out << "<g fill=\"#c51b14\" stroke=\"#ffffff\" stroke-width=\""
      << num(marker / 4.0) << "\">\n";
  for (const Point2& p : result.minimal_points) {
    out << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(frame.flip(p.y))
        << "\" r=\"" << num(marker) << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace hs
