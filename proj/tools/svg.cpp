#include "svg.hpp"

#include <algorithm>
#include <sstream>

namespace toricdp::cli {

namespace {

constexpr std::int64_t kUnit = 40;    // pixels per lattice unit
constexpr std::int64_t kMargin = 1;   // lattice units around each panel
constexpr std::int64_t kGap = 40;     // pixels between panels

struct Bounds {
  std::int64_t xmin = 0, xmax = 0, ymin = 0, ymax = 0;

  std::int64_t width() const { return (xmax - xmin + 2 * kMargin) * kUnit; }
  std::int64_t height() const { return (ymax - ymin + 2 * kMargin) * kUnit; }
  // Panel-local pixel coordinates; SVG y grows downwards.
  std::int64_t px(std::int64_t x) const { return (x - xmin + kMargin) * kUnit; }
  std::int64_t py(std::int64_t y) const { return (ymax - y + kMargin) * kUnit; }
};

Bounds bounds_of(const std::vector<Point>& points) {
  Bounds b;  // always contains the origin
  for (const Point& p : points) {
    b.xmin = std::min(b.xmin, p.x);
    b.xmax = std::max(b.xmax, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.ymax = std::max(b.ymax, p.y);
  }
  return b;
}

void grid(std::ostream& os, const Bounds& b) {
  os << "    <g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (std::int64_t x = b.xmin; x <= b.xmax; ++x) {
    os << "      <line x1=\"" << b.px(x) << "\" y1=\"" << b.py(b.ymax)
       << "\" x2=\"" << b.px(x) << "\" y2=\"" << b.py(b.ymin) << "\"/>\n";
  }
  for (std::int64_t y = b.ymin; y <= b.ymax; ++y) {
    os << "      <line x1=\"" << b.px(b.xmin) << "\" y1=\"" << b.py(y)
       << "\" x2=\"" << b.px(b.xmax) << "\" y2=\"" << b.py(y) << "\"/>\n";
  }
  os << "    </g>\n";
}

// Label placed a quarter unit beyond the point, away from the origin.
void label(std::ostream& os, const Bounds& b, const Point& p,
           const std::string& text) {
  const std::int64_t dx = p.x > 0 ? 8 : (p.x < 0 ? -24 : 4);
  const std::int64_t dy = p.y > 0 ? -8 : (p.y < 0 ? 16 : -6);
  os << "    <text x=\"" << b.px(p.x) + dx << "\" y=\"" << b.py(p.y) + dy
     << "\">" << text << "</text>\n";
}

void fan_panel(std::ostream& os, const std::vector<Point>& rays,
               const Bounds& b) {
  grid(os, b);
  os << "    <circle cx=\"" << b.px(0) << "\" cy=\"" << b.py(0)
     << "\" r=\"3\" fill=\"black\"/>\n";
  for (std::size_t i = 0; i < rays.size(); ++i) {
    os << "    <line class=\"ray\" x1=\"" << b.px(0) << "\" y1=\"" << b.py(0)
       << "\" x2=\"" << b.px(rays[i].x) << "\" y2=\"" << b.py(rays[i].y)
       << "\" stroke=\"black\" stroke-width=\"2\" "
          "marker-end=\"url(#arrow)\"/>\n";
    label(os, b, rays[i], "u_" + std::to_string(i));
  }
}

void polytope_panel(std::ostream& os, const std::vector<Point>& vertices,
                    const Bounds& b) {
  grid(os, b);
  os << "    <polygon class=\"polytope\" points=\"";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) os << ' ';
    os << b.px(vertices[i].x) << ',' << b.py(vertices[i].y);
  }
  os << "\" fill=\"#cfe2f3\" stroke=\"#1f4e79\" stroke-width=\"2\"/>\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    os << "    <circle cx=\"" << b.px(vertices[i].x) << "\" cy=\""
       << b.py(vertices[i].y) << "\" r=\"4\" fill=\"#1f4e79\"/>\n";
    label(os, b, vertices[i], "m_" + std::to_string(i));
  }
}

}  // namespace

std::string render_svg(const std::vector<Point>& rays,
                       const std::vector<Point>& vertices) {
  const Bounds fb = bounds_of(rays);
  const bool with_polytope = !vertices.empty();
  const Bounds pb = bounds_of(vertices);
  const std::int64_t width =
      fb.width() + (with_polytope ? kGap + pb.width() : 0);
  const std::int64_t height =
      std::max(fb.height(), with_polytope ? pb.height() : 0);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
     << height << "\" font-family=\"sans-serif\" font-size=\"14\">\n";
  os << "  <defs>\n"
        "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
        "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">\n"
        "      <path d=\"M0,0 L10,5 L0,10 z\"/>\n"
        "    </marker>\n"
        "  </defs>\n";
  os << "  <rect width=\"" << width << "\" height=\"" << height
     << "\" fill=\"white\"/>\n";
  os << "  <g id=\"fan\">\n";
  fan_panel(os, rays, fb);
  os << "  </g>\n";
  if (with_polytope) {
    os << "  <g id=\"polytope\" transform=\"translate(" << fb.width() + kGap
       << ",0)\">\n";
    polytope_panel(os, vertices, pb);
    os << "  </g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace toricdp::cli
