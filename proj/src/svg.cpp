#include "mosaic/svg.hpp"

#include <fmt/format.h>

#include "mosaic/trace.hpp"

namespace mosaic {

namespace {

constexpr int kUnit = 40;
constexpr int kMargin = 10;

struct Point {
  double x;
  double y;
};

// Half-unit lattice point to pixels.
Point pixel(SitePoint p) {
  return {kMargin + p.col * kUnit / 2.0, kMargin + p.row * kUnit / 2.0};
}

std::string num(double v) { return fmt::format("{:g}", v); }

bool adjacent(Endpoint a, Endpoint b) { return (a + 1) % 4 == b || (b + 1) % 4 == a; }

}  // namespace

std::string render_svg(const Mosaic& m) {
  const int width = m.cols() * kUnit + 2 * kMargin;
  const int height = m.rows() * kUnit + 2 * kMargin;
  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n",
      width, height);
  out += fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n", width, height);

  out += "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (int r = 0; r <= m.rows(); ++r)
    out += fmt::format("<line class=\"grid\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", kMargin,
                       kMargin + r * kUnit, kMargin + m.cols() * kUnit, kMargin + r * kUnit);
  for (int c = 0; c <= m.cols(); ++c)
    out += fmt::format("<line class=\"grid\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", kMargin + c * kUnit,
                       kMargin, kMargin + c * kUnit, kMargin + m.rows() * kUnit);
  out += "</g>\n";

  out += "<g fill=\"none\" stroke=\"black\" stroke-width=\"3\" stroke-linecap=\"round\">\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      const Tile& t = m.tile_at(r, c);
      const Point center = pixel({2 * r + 1, 2 * c + 1});
      for (const EndpointPair& p : t.matching()) {
        const Point a = pixel(endpoint_site(m.family(), r, c, p.a));
        const Point b = pixel(endpoint_site(m.family(), r, c, p.b));
        std::string d;
        if (t.is_crossing() && *t.over != p) {
          // Under strand: gap around the center.
          auto lerp = [](Point u, Point v, double s) { return Point{u.x + (v.x - u.x) * s, u.y + (v.y - u.y) * s}; };
          const Point a1 = lerp(a, b, 0.35);
          const Point b1 = lerp(a, b, 0.65);
          d = fmt::format("M {} {} L {} {} M {} {} L {} {}", num(a.x), num(a.y), num(a1.x), num(a1.y), num(b1.x),
                          num(b1.y), num(b.x), num(b.y));
        } else if (!t.is_crossing() && adjacent(p.a, p.b)) {
          d = fmt::format("M {} {} Q {} {} {} {}", num(a.x), num(a.y), num(center.x), num(center.y), num(b.x),
                          num(b.y));
        } else {
          d = fmt::format("M {} {} L {} {}", num(a.x), num(a.y), num(b.x), num(b.y));
        }
        out += fmt::format("<path class=\"arc\" d=\"{}\"/>\n", d);
      }
    }
  }
  out += "</g>\n";

  const ValidationReport report = validate(m);
  if (!report.valid) {
    out += "<g fill=\"none\" stroke=\"red\" stroke-width=\"2\">\n";
    for (const Site& s : report.offending_sites) {
      SitePoint p{2 * s.row, 2 * s.col};
      if (s.kind == Site::Kind::HorizontalEdge) p = {2 * s.row, 2 * s.col + 1};
      if (s.kind == Site::Kind::VerticalEdge) p = {2 * s.row + 1, 2 * s.col};
      const Point q = pixel(p);
      out += fmt::format("<circle class=\"offending\" cx=\"{}\" cy=\"{}\" r=\"6\"/>\n", num(q.x), num(q.y));
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace mosaic
