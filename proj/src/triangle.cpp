#include "poncelet/triangle.hpp"

#include "poncelet/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace poncelet {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_unit(const Circled& circle) {
  if (std::abs(circle.radius - 1.0) > Tolerance::alg) throw Error(Errc::Validation, "circle must be normalized to radius 1");
}

/// Contact point of a line tangent to the parabola: the tangent at ordinate
/// y has direction (y, p).
Point2d contact_of(const Line2d& line, const CanonicalParabolad& par) {
  const Vector2d d = line.direction();
  if (std::abs(d.y()) <= 1e-15) throw Error(Errc::Degenerate, "horizontal line is never tangent");
  return par.point_at_y(par.p * d.x() / d.y());
}

double angle_in(double theta, double from) {
  double t = std::fmod(theta - from, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return from + t;
}

}  // namespace

double q_of(const Point2d& e) { return e.squaredNorm() - 1.0; }

ClosureDefect closure_defect(const Point2d& a, const Circled& circle, const CanonicalParabolad& par) {
  require_unit(circle);
  if (!circle.contains(a)) throw Error(Errc::Configuration, "vertex is not on the circle");
  const TangentPair pair = tangents_from_point(a, par);
  ClosureDefect out{};
  out.b = second_intersection(circle, a, pair.tangents.front().line.direction());
  out.c = second_intersection(circle, a, pair.tangents.back().line.direction());
  const PolarForms bc = polar_forms(out.b, out.c, par);
  out.lhs = bc.tangency_residual();
  const double r2 = a.squaredNorm();
  out.rhs = -4.0 * par.p * eval_S(a, par) * q_of(circle.center) * common_tangency_residual(a, circle, par) / (r2 * r2);
  return out;
}

PonceletTriangle build_triangle(const Point2d& a, const Circled& circle, const CanonicalParabolad& par) {
  require_unit(circle);
  if (std::abs(q_of(circle.center)) > Tolerance::alg) {
    throw Error(Errc::NoClosure, "the circle does not pass through the focus");
  }
  if (!circle.contains(a)) throw Error(Errc::Configuration, "vertex is not on the circle");
  if (eval_S(a, par) < -Tolerance::alg) throw Error(Errc::VertexInside, "vertex lies inside the parabola");

  const TangentPair pair = tangents_from_point(a, par);
  const Tangent& t1 = pair.tangents.front();
  const Tangent& t2 = pair.tangents.back();
  PonceletTriangle tri;
  const Point2d b = second_intersection(circle, a, t1.line.direction());
  const Point2d c = second_intersection(circle, a, t2.line.direction());
  tri.vertices = {a, b, c};
  Line2d closing = (b - c).norm() > Tolerance::geo ? Line2d::through(b, c) : circle.tangent_at(b);
  tri.contacts = {t1.contact, t2.contact, contact_of(closing, par)};
  tri.closure_residual = std::abs(par.tangency(closing));
  tri.trivial = (a - b).norm() <= Tolerance::geo || (a - c).norm() <= Tolerance::geo || (b - c).norm() <= Tolerance::geo;
  return tri;
}

Point2d euler_point(const Point2d& e, const Point2d& orthocenter, double t) { return e + t * (orthocenter - e); }

TriangleCenters synthetic_centers(const std::array<Point2d, 3>& v) {
  const auto& [a, b, c] = v;
  const Line2d alt_a = Line2d::along(a, perp(Vector2d(c - b)));
  const Line2d alt_b = Line2d::along(b, perp(Vector2d(c - a)));
  const auto o = intersect(alt_a, alt_b);
  const auto circ = circumcircle(a, b, c);
  if (!o || !circ) throw Error(Errc::Degenerate, "degenerate triangle");
  TriangleCenters out;
  out.orthocenter = *o;
  out.centroid = (a + b + c) / 3.0;
  out.circumcenter = circ->center;
  out.nine_point = midpoint(out.circumcenter, out.orthocenter);
  out.degenerate_euler = (out.orthocenter - out.circumcenter).norm() <= Tolerance::geo;
  out.synthetic = true;
  return out;
}

TriangleCenters centers(const Point2d& a, const Circled& circle, const CanonicalParabolad& par) {
  const PonceletTriangle tri = build_triangle(a, circle, par);
  const Point2d& e = circle.center;
  const double p = par.p;
  const double den = a.dot(e);
  TriangleCenters out;
  if (std::abs(den) <= Tolerance::geo * std::max(1.0, a.norm())) {
    if (!tri.trivial) return synthetic_centers(tri.vertices);
    // Two vertices coincide: fall back on O = A + B + C - 2E.
    out.orthocenter = tri.vertices[0] + tri.vertices[1] + tri.vertices[2] - 2.0 * e;
    out.synthetic = true;
  } else {
    out.orthocenter = Point2d(-p, a.y() + (a.x() + p) * (e.x() * a.y() - a.x() * e.y()) / den);
  }
  out.circumcenter = e;
  out.centroid = euler_point(e, out.orthocenter, 1.0 / 3.0);
  out.nine_point = euler_point(e, out.orthocenter, 0.5);
  out.degenerate_euler = (out.orthocenter - e).norm() <= Tolerance::geo;
  return out;
}

Circled nine_point_circle(const std::array<Point2d, 3>& v) {
  const auto circ = circumcircle(v[0], v[1], v[2]);
  if (!circ) throw Error(Errc::Degenerate, "degenerate triangle");
  const Point2d o = v[0] + v[1] + v[2] - 2.0 * circ->center;
  return Circled(midpoint(circ->center, o), circ->radius / 2.0);
}

std::vector<Arc> exterior_arcs(const Circled& circle, const CanonicalParabolad& par) {
  const std::vector<Point2d> pts = circle_parabola_intersections(circle, par);
  const Point2d& e = circle.center;
  std::vector<Arc> arcs;
  if (pts.empty()) {
    if (par.eval(circle.at(0.0)) > 0.0) arcs.push_back({0.0, kTwoPi});
    return arcs;
  }
  std::vector<double> theta;
  for (const Point2d& q : pts) theta.push_back(std::atan2(q.y() - e.y(), q.x() - e.x()));
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const double t0 = theta[i];
    const double t1 = i + 1 < theta.size() ? theta[i + 1] : theta.front() + kTwoPi;
    if (t1 - t0 <= 1e-12) continue;
    if (par.eval(circle.at(0.5 * (t0 + t1))) > 0.0) arcs.push_back({t0, t1});
  }
  return arcs;
}

std::vector<OrthocenterRange> orthocenter_ranges(const Circled& circle, const CanonicalParabolad& par) {
  const CommonTangentSet common = common_tangent_points(circle, par);
  const Point2d& e = circle.center;
  std::vector<OrthocenterRange> out;
  for (const Arc& arc : exterior_arcs(circle, par)) {
    std::vector<std::pair<double, Point2d>> on_arc;  // (orthocenter ordinate, point)
    for (const Point2d& x : common.points) {
      const double t = angle_in(std::atan2(x.y() - e.y(), x.x() - e.x()), arc.theta0);
      if (t > arc.theta0 && t < arc.theta1) on_arc.emplace_back(centers(x, circle, par).orthocenter.y(), x);
    }
    if (on_arc.size() < 2) continue;
    std::sort(on_arc.begin(), on_arc.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
    OrthocenterRange r;
    r.x = on_arc.front().second;
    r.x_prime = on_arc.back().second;
    r.o_min = Point2d(-par.p, on_arc.front().first);
    r.o_max = Point2d(-par.p, on_arc.back().first);
    r.arc = arc;
    out.push_back(r);
  }
  return out;
}

OrthocenterRange orthocenter_range(const Circled& circle, const CanonicalParabolad& par) {
  if (circle.center.norm() <= Tolerance::geo) throw Error(Errc::Configuration, "circle is centered at the focus");
  const std::vector<OrthocenterRange> ranges = orthocenter_ranges(circle, par);
  if (ranges.empty()) throw Error(Errc::Configuration, "no exterior arc carries two common-tangent points");
  return *std::max_element(ranges.begin(), ranges.end(), [](const OrthocenterRange& u, const OrthocenterRange& v) {
    return u.arc.length() < v.arc.length();
  });
}

TriangleWithCircle triangle_from_orthocenter(const Point2d& o, double y1, double y2, const CanonicalParabolad& par) {
  if (std::abs(o.x() + par.p) > Tolerance::geo) throw Error(Errc::Validation, "orthocenter must lie on the directrix");
  const Line2d t1 = par.tangent_at_y(y1);
  const Line2d t2 = par.tangent_at_y(y2);
  const auto a = intersect(t1, t2);
  if (!a) throw Error(Errc::Degenerate, "the two tangents are parallel");
  if (std::abs(a->x() + par.p) <= Tolerance::geo) throw Error(Errc::Degenerate, "tangents meet on the directrix");
  const auto b = intersect(Line2d::along(o, t1.normal()), t2);
  const auto c = intersect(Line2d::along(o, t2.normal()), t1);
  if (!b || !c) throw Error(Errc::Degenerate, "altitude parallel to a side");
  const auto circ = circumcircle(*a, *b, *c);
  if (!circ) throw Error(Errc::Degenerate, "collinear vertices");
  TriangleWithCircle out{PonceletTriangle{}, *circ};
  out.triangle.vertices = {*a, *b, *c};
  const Line2d bc = Line2d::through(*b, *c);
  out.triangle.contacts = {par.point_at_y(y2), par.point_at_y(y1), contact_of(bc, par)};
  out.triangle.closure_residual = std::abs(par.tangency(bc));
  return out;
}

double pedal_curve_residual(const Point2d& m, const Point2d& e, double p) {
  const double x = m.x(), y = m.y(), xe = e.x(), ye = e.y();
  return 2.0 * x * x * x + 2.0 * x * y * y + (p - 4.0 * xe) * x * x - 2.0 * ye * x * y + (p - 2.0 * xe) * y * y +
         2.0 * xe * (xe - p) * x + 2.0 * ye * (xe - p) * y + p * (xe * xe + ye * ye);
}

Point2d pedal_point(double t, const Point2d& e, double p) {
  const double k = (t * e.x() + e.y()) / (t * t + 1.0);
  return Point2d(-p / 2.0 + t * k, p / 2.0 * t + k);
}

std::vector<double> pedal_parameters_through_center(const Point2d& e, double p) {
  std::vector<double> out;
  for (const Root<double>& r : solve_quadratic(p * p, -2.0 * e.y() * p, 2.0 * p * e.x() + p * p)) {
    if (r.multiplicity == 1) out.push_back(r.value);
  }
  return out;
}

}  // namespace poncelet
