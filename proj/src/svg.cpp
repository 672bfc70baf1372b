#include "tropigon/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace tropigon {

namespace {

constexpr double kUnit = 40.0;
constexpr double kMargin = 30.0;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct Pane {
  double ox, oy;    // svg position of the pane origin
  double maxy;      // world y mapped to pane top
  double x(double wx) const { return ox + wx * kUnit; }
  double y(double wy) const { return oy + (maxy - wy) * kUnit; }
};

}  // namespace

std::string render_svg(const Subdivision& sub, const TropicalCurve* curve) {
  double nx0 = 0, nx1 = 1, ny0 = 0, ny1 = 1;
  if (!sub.newton.empty()) {
    nx0 = nx1 = static_cast<double>(sub.newton[0].x);
    ny0 = ny1 = static_cast<double>(sub.newton[0].y);
    for (const Pt& p : sub.newton) {
      nx0 = std::min(nx0, static_cast<double>(p.x));
      nx1 = std::max(nx1, static_cast<double>(p.x));
      ny0 = std::min(ny0, static_cast<double>(p.y));
      ny1 = std::max(ny1, static_cast<double>(p.y));
    }
  }

  // Curve clip box: 1.5x the vertex spread around the vertex bbox center.
  double cx0 = -1, cx1 = 1, cy0 = -1, cy1 = 1;
  if (curve && !curve->verts.empty()) {
    cx0 = cx1 = curve->verts[0].pos.x.get_d();
    cy0 = cy1 = curve->verts[0].pos.y.get_d();
    for (const CurveVertex& v : curve->verts) {
      cx0 = std::min(cx0, v.pos.x.get_d());
      cx1 = std::max(cx1, v.pos.x.get_d());
      cy0 = std::min(cy0, v.pos.y.get_d());
      cy1 = std::max(cy1, v.pos.y.get_d());
    }
    double mx = (cx0 + cx1) / 2, my = (cy0 + cy1) / 2;
    double half = 1.5 * std::max({(cx1 - cx0) / 2, (cy1 - cy0) / 2, 1.0});
    cx0 = mx - half;
    cx1 = mx + half;
    cy0 = my - half;
    cy1 = my + half;
  }

  Pane left{kMargin, kMargin, ny1};
  double left_w = (nx1 - nx0) * kUnit;
  Pane right{kMargin + left_w + 3 * kMargin, kMargin, cy1};
  double width = right.ox + (cx1 - cx0) * kUnit + kMargin;
  double height = 2 * kMargin + kUnit * std::max(ny1 - ny0, cy1 - cy0);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << " "
      << num(height) << "\">\n";

  // Left pane: subdivision cells.
  auto lx = [&](double wx) { return left.x(wx - nx0); };
  auto ly = [&](double wy) { return left.y(wy); };
  for (const SubCell& c : sub.cells) {
    out << "  <polygon points=\"";
    for (size_t k = 0; k < c.poly.size(); k++) {
      if (k) out << " ";
      out << num(lx(static_cast<double>(c.poly[k].x))) << ","
          << num(ly(static_cast<double>(c.poly[k].y)));
    }
    out << "\" fill=\"#e8f0fe\" stroke=\"#1a355e\" stroke-width=\"1.5\"/>\n";
  }
  if (sub.cells.empty() && sub.newton.size() >= 2) {
    out << "  <path d=\"M " << num(lx(static_cast<double>(sub.newton[0].x))) << " "
        << num(ly(static_cast<double>(sub.newton[0].y))) << " L "
        << num(lx(static_cast<double>(sub.newton.back().x))) << " "
        << num(ly(static_cast<double>(sub.newton.back().y)))
        << "\" stroke=\"#1a355e\" stroke-width=\"1.5\"/>\n";
  }
  for (const Pt& p : sub.newton)
    out << "  <circle cx=\"" << num(lx(static_cast<double>(p.x))) << "\" cy=\""
        << num(ly(static_cast<double>(p.y))) << "\" r=\"2.5\" fill=\"#1a355e\"/>\n";

  // Right pane: curve edges and clipped rays.
  if (curve) {
    auto rx = [&](double wx) { return right.x(wx - cx0); };
    auto ry = [&](double wy) { return right.y(wy); };
    auto emit_seg = [&](double x1, double y1, double x2, double y2, long w) {
      out << "  <path d=\"M " << num(rx(x1)) << " " << num(ry(y1)) << " L " << num(rx(x2))
          << " " << num(ry(y2)) << "\" stroke=\"#b03030\" stroke-width=\""
          << num(w > 1 ? 2.5 : 1.5) << "\" fill=\"none\"/>\n";
      if (w > 1)
        out << "  <text x=\"" << num(rx((x1 + x2) / 2) + 5) << "\" y=\""
            << num(ry((y1 + y2) / 2) - 5) << "\" font-size=\"13\" fill=\"#b03030\">"
            << w << "</text>\n";
    };
    for (const CurveEdge& e : curve->edges) {
      emit_seg(curve->verts[e.v1].pos.x.get_d(), curve->verts[e.v1].pos.y.get_d(),
               curve->verts[e.v2].pos.x.get_d(), curve->verts[e.v2].pos.y.get_d(),
               e.weight);
    }
    for (const CurveRay& r : curve->rays) {
      double x = curve->verts[r.v].pos.x.get_d();
      double y = curve->verts[r.v].pos.y.get_d();
      double t = 1e18;
      if (r.dir.x > 0) t = std::min(t, (cx1 - x) / r.dir.x);
      if (r.dir.x < 0) t = std::min(t, (cx0 - x) / r.dir.x);
      if (r.dir.y > 0) t = std::min(t, (cy1 - y) / r.dir.y);
      if (r.dir.y < 0) t = std::min(t, (cy0 - y) / r.dir.y);
      if (t < 0) t = 0;
      emit_seg(x, y, x + t * r.dir.x, y + t * r.dir.y, r.weight);
    }
    for (const CurveVertex& v : curve->verts)
      out << "  <circle cx=\"" << num(rx(v.pos.x.get_d())) << "\" cy=\""
          << num(ry(v.pos.y.get_d())) << "\" r=\"3\" fill=\"#b03030\"/>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace tropigon
