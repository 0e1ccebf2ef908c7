#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace poncelet::cli {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::Validation, what); }

Point2d read_point(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) invalid("points must be [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Point2d> read_points(const nlohmann::json& j) {
  if (!j.is_array()) invalid("expected a list of points");
  std::vector<Point2d> out;
  for (const auto& p : j) out.push_back(read_point(p));
  return out;
}

Line2d read_line(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) invalid("lines must be [a, b, c]");
  for (const auto& v : j)
    if (!v.is_number()) invalid("lines must be [a, b, c]");
  if (j[0].get<double>() == 0.0 && j[1].get<double>() == 0.0) invalid("line with zero normal");
  return Line2d(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

struct Box {
  double x0{kBig}, y0{kBig}, x1{-kBig}, y1{-kBig};
  static constexpr double kBig = 1e300;
  void add(const Point2d& p) {
    if (!is_finite(p)) return;
    x0 = std::min(x0, p.x()), y0 = std::min(y0, p.y());
    x1 = std::max(x1, p.x()), y1 = std::max(y1, p.y());
  }
  bool empty() const { return x0 > x1; }
  std::array<Point2d, 4> corners() const { return {Point2d(x0, y0), Point2d(x1, y0), Point2d(x1, y1), Point2d(x0, y1)}; }
};

/// Segment of the line inside the box, if any.
std::optional<std::pair<Point2d, Point2d>> clip(const Line2d& l, const Box& b) {
  const Point2d o = l.anchor();
  const Vector2d d = l.direction();
  double lo = -1e300, hi = 1e300;
  for (int axis = 0; axis < 2; ++axis) {
    const double mn = axis == 0 ? b.x0 : b.y0, mx = axis == 0 ? b.x1 : b.y1;
    if (std::abs(d[axis]) < 1e-15) {
      if (o[axis] < mn || o[axis] > mx) return std::nullopt;
      continue;
    }
    double t0 = (mn - o[axis]) / d[axis], t1 = (mx - o[axis]) / d[axis];
    if (t0 > t1) std::swap(t0, t1);
    lo = std::max(lo, t0), hi = std::min(hi, t1);
  }
  if (lo >= hi) return std::nullopt;
  return std::pair{Point2d(o + lo * d), Point2d(o + hi * d)};
}

class Out {
 public:
  void raw(const std::string& s) { buf_ += s; }
  void num(double v) {
    char b[64];
    std::snprintf(b, sizeof b, "%.6f", v == 0.0 ? 0.0 : v);
    buf_ += b;
  }
  void pt(const Point2d& p) {
    num(p.x());
    buf_ += ',';
    num(p.y());
  }
  void pts(const std::vector<Point2d>& v) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) buf_ += ' ';
      pt(v[k]);
    }
  }
  std::string str() const { return buf_; }

 private:
  std::string buf_;
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

Figure figure_from_json(const nlohmann::json& j) {
  if (!j.is_object()) invalid("figure must be a JSON object");
  Figure f;
  if (j.contains("circle") || j.contains("parabola")) {
    nlohmann::json sj = nlohmann::json::object();
    if (j.contains("circle")) sj["circle"] = j["circle"];
    if (j.contains("parabola")) sj["parabola"] = j["parabola"];
    const Scene s = scene_from_json(sj);
    if (j.contains("circle")) f.circle = s.circle;
    f.parabola = s.parabola;
  }
  if (j.contains("polygons"))
    for (const auto& p : j["polygons"]) f.polygons.push_back(read_points(p));
  if (j.contains("polylines"))
    for (const auto& p : j["polylines"]) f.polylines.push_back(read_points(p));
  if (j.contains("lines"))
    for (const auto& l : j["lines"]) f.lines.push_back(read_line(l));
  if (j.contains("points")) {
    for (const auto& m : j["points"]) {
      if (!m.is_object() || !m.contains("at")) invalid("marked points need \"at\"");
      f.points.push_back({m.value("label", std::string()), read_point(m["at"])});
    }
  }
  if (j.contains("dots")) f.dots = read_points(j["dots"]);
  return f;
}

void add_to_json(const Figure& f, ojson& j) {
  if (f.circle) j["circle"] = {{"center", point_json(f.circle->center)}, {"radius", f.circle->radius}};
  if (f.parabola) j["parabola"] = {{"focus", point_json(f.parabola->focus)}, {"directrix", line_json(f.parabola->directrix)}};
  auto list = [](const std::vector<Point2d>& v) {
    ojson a = ojson::array();
    for (const Point2d& p : v) a.push_back(point_json(p));
    return a;
  };
  if (!f.polygons.empty()) {
    j["polygons"] = ojson::array();
    for (const auto& p : f.polygons) j["polygons"].push_back(list(p));
  }
  if (!f.polylines.empty()) {
    j["polylines"] = ojson::array();
    for (const auto& p : f.polylines) j["polylines"].push_back(list(p));
  }
  if (!f.lines.empty()) {
    j["lines"] = ojson::array();
    for (const Line2d& l : f.lines) j["lines"].push_back(line_json(l));
  }
  if (!f.points.empty()) {
    j["points"] = ojson::array();
    for (const Mark& m : f.points) j["points"].push_back({{"label", m.label}, {"at", point_json(m.at)}});
  }
  if (!f.dots.empty()) j["dots"] = list(f.dots);
}

std::string render_svg(const Figure& f, double s) {
  Box box;
  if (f.circle) {
    const Vector2d r(f.circle->radius, f.circle->radius);
    box.add(f.circle->center - r);
    box.add(f.circle->center + r);
  }
  if (f.parabola) {
    box.add(f.parabola->focus);
    box.add(midpoint(f.parabola->focus, f.parabola->directrix.project(f.parabola->focus)));
  }
  for (const auto& poly : f.polygons)
    for (const Point2d& p : poly) box.add(p);
  for (const auto& poly : f.polylines)
    for (const Point2d& p : poly) box.add(p);
  for (const Mark& m : f.points) box.add(m.at);
  for (const Point2d& p : f.dots) box.add(p);
  if (box.empty()) box = Box{-2.0, -2.0, 2.0, 2.0};
  const double margin = std::max(0.1 * std::max(box.x1 - box.x0, box.y1 - box.y0), 0.1);
  box.x0 -= margin, box.y0 -= margin, box.x1 += margin, box.y1 += margin;

  // Coordinates are written in pixels (y down) so no renderer has to honour
  // non-scaling strokes.
  auto px = [&](const Point2d& p) { return Point2d(s * (p.x() - box.x0), s * (box.y1 - p.y())); };
  auto pxs = [&](const std::vector<Point2d>& v) {
    std::vector<Point2d> out;
    out.reserve(v.size());
    for (const Point2d& p : v) out.push_back(px(p));
    return out;
  };
  auto disc = [&](Out& o, const char* cls, const Point2d& at, double r, const char* paint) {
    const Point2d c = px(at);
    o.raw("<circle class=\"");
    o.raw(cls);
    o.raw("\" cx=\"");
    o.num(c.x());
    o.raw("\" cy=\"");
    o.num(c.y());
    o.raw("\" r=\"");
    o.num(r);
    o.raw(paint);
    o.raw("/>\n");
  };

  const double width = std::ceil((box.x1 - box.x0) * s), height = std::ceil((box.y1 - box.y0) * s);
  Out o;
  o.raw("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
  o.raw("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"");
  o.num(width);
  o.raw("\" height=\"");
  o.num(height);
  o.raw("\" viewBox=\"0 0 ");
  o.num(width);
  o.raw(" ");
  o.num(height);
  o.raw("\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
  o.raw("<g fill=\"none\" stroke-width=\"1.5\">\n");

  if (f.circle) disc(o, "circle", f.circle->center, s * f.circle->radius, "\" fill=\"none\" stroke=\"#1f4e9c\"");
  if (f.parabola) {
    const GeneralParabolad& par = *f.parabola;
    const Point2d foot = par.directrix.project(par.focus);
    const Vector2d v = par.directrix.direction();
    const Vector2d u = (par.focus - foot).normalized();
    const double d = par.focal_distance();
    double lo = 1e300, hi = -1e300;
    for (const Point2d& c : box.corners()) {
      lo = std::min(lo, (c - foot).dot(v));
      hi = std::max(hi, (c - foot).dot(v));
    }
    std::vector<Point2d> curve;
    for (int k = 0; k < 256; ++k) {
      const double t = lo + (hi - lo) * k / 255.0;
      curve.push_back(px(foot + t * v + u * (t * t + d * d) / (2.0 * d)));
    }
    o.raw("<polyline class=\"parabola\" points=\"");
    o.pts(curve);
    o.raw("\" fill=\"none\" stroke=\"#b5361c\"/>\n");
    if (const auto seg = clip(par.directrix, box)) {
      o.raw("<polyline class=\"directrix\" points=\"");
      o.pts({px(seg->first), px(seg->second)});
      o.raw("\" fill=\"none\" stroke=\"#b5361c\" stroke-dasharray=\"6 4\"/>\n");
    }
  }
  for (const Line2d& l : f.lines) {
    if (const auto seg = clip(l, box)) {
      o.raw("<polyline class=\"line\" points=\"");
      o.pts({px(seg->first), px(seg->second)});
      o.raw("\" fill=\"none\" stroke=\"#777777\" stroke-dasharray=\"3 3\"/>\n");
    }
  }
  for (const auto& poly : f.polygons) {
    o.raw("<polygon class=\"polygon\" points=\"");
    o.pts(pxs(poly));
    o.raw("\" fill=\"none\" stroke=\"#222222\"/>\n");
  }
  for (const auto& poly : f.polylines) {
    o.raw("<polyline class=\"locus\" points=\"");
    o.pts(pxs(poly));
    o.raw("\" fill=\"none\" stroke=\"#2a8a3e\"/>\n");
  }
  for (const Point2d& p : f.dots) disc(o, "dot", p, 1.5, "\" fill=\"#2a8a3e\" stroke=\"none\"");
  for (const Mark& m : f.points) disc(o, "mark", m.at, 3.0, "\" fill=\"#000000\" stroke=\"none\"");
  o.raw("</g>\n");
  for (const Mark& m : f.points) {
    if (m.label.empty()) continue;
    const Point2d c = px(m.at);
    o.raw("<text x=\"");
    o.num(c.x() + 5.0);
    o.raw("\" y=\"");
    o.num(c.y() - 5.0);
    o.raw("\" font-family=\"sans-serif\" font-size=\"12\">");
    o.raw(escape(m.label));
    o.raw("</text>\n");
  }
  o.raw("</svg>\n");
  return o.str();
}

}  // namespace poncelet::cli
