#include "poncelet/quad.hpp"

#include <algorithm>
#include <cmath>

namespace poncelet {

namespace {

void require_unit(const Circled& circle) {
  if (std::abs(circle.radius - 1.0) > Tolerance::alg) throw Error(Errc::Validation, "circle must be normalized to radius 1");
}

/// Line through p and q, or the line through p along dir when q is missing.
std::optional<Line2d> line_of(const std::optional<Point2d>& p, const std::optional<Point2d>& q,
                              const Vector2d& q_dir) {
  if (p && q) {
    if ((*p - *q).norm() <= Tolerance::geo) return std::nullopt;
    return Line2d::through(*p, *q);
  }
  if (p) return Line2d::along(*p, q_dir);
  return std::nullopt;
}

std::optional<Point2d> meet(const Point2d& a, const Point2d& b, const Point2d& c, const Point2d& d) {
  const Vector2d u = (b - a).normalized(), v = (d - c).normalized();
  if (std::abs(cross(u, v)) <= 1e-12) return std::nullopt;
  return intersect(Line2d::through(a, b), Line2d::through(c, d), 0.0);
}

Line2d maltitude(const Point2d& a, const Point2d& b, const Point2d& c, const Point2d& d) {
  return Line2d::along(midpoint(a, b), perp(Vector2d(d - c)));
}

}  // namespace

PonceletQuad make_quad(const std::array<Point2d, 4>& v, const GeneralParabolad& par) {
  PonceletQuad q;
  q.vertices = v;
  for (std::size_t k = 0; k < 4; ++k) {
    const Point2d& u = v[k];
    const Point2d& w = v[(k + 1) % 4];
    if ((u - w).norm() <= Tolerance::geo) throw Error(Errc::Degenerate, "coincident consecutive vertices");
    const Line2d side = Line2d::through(u, w);
    q.contacts[k] = par.contact(side);
    q.closure_residual = std::max(q.closure_residual, std::abs(par.tangency(side)));
  }
  q.diagonal_point = meet(v[0], v[2], v[1], v[3]);
  if (!q.diagonal_point) q.diagonal_direction = (v[2] - v[0]).normalized();
  return q;
}

double butterfly_partner_x(double x_a, double p) {
  const double x_b = -p - x_a;
  if (std::abs(x_a) > 1.0 + Tolerance::geo || std::abs(x_b) > 1.0 + Tolerance::geo) {
    throw Error(Errc::NoChord, "partner abscissa outside the circle");
  }
  return x_b;
}

PonceletQuad build_butterfly(const Point2d& a, const Circled& circle, const CanonicalParabolad& par) {
  require_unit(circle);
  if (circle.center.norm() > Tolerance::geo) throw Error(Errc::Configuration, "circle must be centered at the focus");
  const double p = par.p;
  if (std::abs(p) >= 2.0) throw Error(Errc::Configuration, "no butterfly when |p| >= 2");
  if (!circle.contains(a)) throw Error(Errc::Configuration, "vertex is not on the circle");
  if (eval_S(a, par) <= Tolerance::alg) throw Error(Errc::Configuration, "vertex must lie outside the parabola");
  if (std::abs(a.x() + p / 2.0) <= Tolerance::geo) throw Error(Errc::Configuration, "vertex on the midline gives a degenerate butterfly");
  const double x_b = butterfly_partner_x(a.x(), p);
  const double y_b = std::copysign(std::sqrt(std::max(0.0, 1.0 - x_b * x_b)), a.y());
  const Point2d b(x_b, y_b), c(a.x(), -a.y()), d(x_b, -y_b);
  return make_quad({a, b, c, d}, GeneralParabolad::from(par));
}

std::vector<CompassTangent> compass_tangents(const Point2d& focus, const Line2d& directrix, const Point2d& a) {
  const double r = (a - focus).norm();
  const double dist = directrix.distance(a);
  std::vector<Point2d> ts;
  if (std::abs(r - dist) <= Tolerance::geo * std::max(1.0, r)) {
    ts.push_back(directrix.project(a));
  } else if (r > dist) {
    ts = intersect(Circled(a, r), directrix);
  }
  std::vector<CompassTangent> out;
  for (const Point2d& t : ts) {
    // Both circles of radius |AF| about T and F pass through A and meet again
    // on the perpendicular bisector of FT.
    std::vector<Point2d> xs;
    if (r > 0.0) xs = intersect(Circled(t, r), Circled(focus, r));
    Line2d line = (xs.size() == 2 && (xs[0] - xs[1]).norm() > Tolerance::geo)
                      ? Line2d::through(xs[0], xs[1])
                      : Line2d::along(midpoint(focus, t), perp(Vector2d(t - focus)));
    const auto contact = intersect(line, directrix.perpendicular_through(t));
    if (!contact) continue;
    out.push_back({line, *contact, t});
  }
  const Vector2d along = directrix.direction();
  std::sort(out.begin(), out.end(), [&](const CompassTangent& u, const CompassTangent& v) {
    return u.t.dot(along) < v.t.dot(along);
  });
  return out;
}

CanonicalParabolad parabola_through_chord(const Point2d& a, const Point2d& b) {
  if ((a - b).norm() <= Tolerance::geo) throw Error(Errc::NoParabola, "chord endpoints coincide");
  const Line2d chord = Line2d::through(a, b);
  if (std::abs(chord.c()) <= Tolerance::geo) throw Error(Errc::NoParabola, "chord passes through the focus");
  if (std::abs(chord.a()) <= Tolerance::geo) throw Error(Errc::NoParabola, "chord is parallel to the axis");
  return CanonicalParabolad(2.0 * chord.a() * chord.c());
}

DiagonalPoint l_point(const Point2d& e) {
  const double r2 = e.squaredNorm();
  if (std::sqrt(r2) <= Tolerance::geo) throw Error(Errc::UndefinedPoint, "L is undefined when the circle is centered at the focus");
  const Point2d l = e * (r2 - 1.0) / r2;
  if (std::abs(l.x()) <= Tolerance::geo) throw Error(Errc::DegenerateParabola, "vertical directrix through L contains the focus");
  return {l, -l.x()};
}

PonceletQuad build_quad_through_L(const Point2d& a, const Circled& circle, const CanonicalParabolad& par) {
  require_unit(circle);
  const DiagonalPoint lp = l_point(circle.center);
  if (!circle.contains(a)) throw Error(Errc::Configuration, "vertex is not on the circle");
  if (eval_S(a, par) <= Tolerance::alg) throw Error(Errc::Configuration, "vertex must lie outside the parabola");
  if ((a - lp.l).norm() <= Tolerance::geo) throw Error(Errc::Configuration, "vertex coincides with L");
  const TangentPair pair = tangents_from_point(a, par);
  const Point2d b = second_intersection(circle, a, pair.tangents.front().line.direction());
  const Point2d d = second_intersection(circle, a, pair.tangents.back().line.direction());
  const Point2d c = second_intersection(circle, a, Vector2d(lp.l - a));
  return make_quad({a, b, c, d}, GeneralParabolad::from(par));
}

QuadDerivedPoints quad_derived_points(const PonceletQuad& q) {
  const auto& [a, b, c, d] = q.vertices;
  QuadDerivedPoints out;
  out.i = meet(a, b, c, d);
  out.j = meet(a, d, b, c);
  const Line2d m_ab = maltitude(a, b, c, d);
  const Line2d m_bc = maltitude(b, c, d, a);
  const Line2d m_cd = maltitude(c, d, a, b);
  const Line2d m_da = maltitude(d, a, b, c);
  // Pick the better-conditioned pair to intersect.
  auto t = intersect(m_ab, m_bc);
  auto alt = intersect(m_cd, m_da);
  if (!t && !alt) throw Error(Errc::Degenerate, "maltitudes are parallel");
  const bool first = t.has_value();
  out.anticenter = first ? *t : *alt;
  out.maltitude_spread = first ? std::max(m_cd.distance(out.anticenter), m_da.distance(out.anticenter))
                               : std::max(m_ab.distance(out.anticenter), m_bc.distance(out.anticenter));
  out.centroid = (a + b + c + d) / 4.0;
  const Point2d m1 = midpoint(a, c), m2 = midpoint(b, d);
  if ((m1 - m2).norm() > Tolerance::geo) out.newton_gauss = Line2d::through(m1, m2);
  return out;
}

std::pair<GeneralParabolad, Circled> inscribe_parabola_in_trapezoid(const Point2d& a, const Point2d& b,
                                                                  const Point2d& d, const Point2d& c) {
  const auto circ = circumcircle(a, b, d);
  if (!circ) throw Error(Errc::Validation, "collinear vertices");
  const double scale = circ->radius;
  if (!circ->contains(c, Tolerance::geo)) throw Error(Errc::Validation, "vertices are not concyclic");
  const Vector2d ac = (c - a).normalized(), bd = (d - b).normalized();
  if (std::abs(cross(ac, bd)) > Tolerance::geo) throw Error(Errc::Validation, "bases AC and BD are not parallel");
  if (std::abs((b - a).norm() - (d - c).norm()) > Tolerance::geo * scale) {
    throw Error(Errc::Validation, "legs AB and CD differ in length");
  }
  const Point2d focus = circ->center;
  const Line2d midline = Line2d::along(midpoint(a, b), ac);
  if (midline.distance(focus) <= Tolerance::geo * scale) {
    throw Error(Errc::DegenerateParabola, "midline passes through the center");
  }
  // The midline is the vertex tangent, halfway between focus and directrix.
  const Point2d foot = midline.project(focus);
  const Line2d directrix = Line2d::along(focus + 2.0 * (foot - focus), ac);
  return {GeneralParabolad(focus, directrix), *circ};
}

GeneralParabolad inscribe_parabola_in_cyclic_quad(const Point2d& a, const Point2d& b, const Point2d& c,
                                                  const Point2d& d) {
  const auto circ = circumcircle(a, b, c);
  if (!circ) throw Error(Errc::Validation, "collinear vertices");
  const double scale = circ->radius;
  if (!circ->contains(d, Tolerance::geo)) throw Error(Errc::Validation, "vertices are not concyclic");
  const auto l = meet(a, c, b, d);
  if (!l) return inscribe_parabola_in_trapezoid(a, b, d, c).first;

  const auto i = meet(a, b, c, d);
  const auto j = meet(a, d, b, c);
  std::optional<Line2d> ij = i && j ? line_of(i, j, Vector2d::Zero())
                             : i    ? line_of(i, std::nullopt, Vector2d(d - a))
                             : j    ? line_of(j, std::nullopt, Vector2d(b - a))
                                    : std::nullopt;
  if (!ij) throw Error(Errc::Degenerate, "both pairs of opposite sides are parallel");
  const Point2d& e = circ->center;
  if ((*l - e).norm() <= Tolerance::geo * scale) throw Error(Errc::Degenerate, "diagonals meet at the center");
  const auto focus = intersect(*ij, Line2d::through(e, *l));
  if (!focus) throw Error(Errc::InconsistentQuad, "IJ is parallel to EL");

  // The directrix carries the reflections of the focus in all four sides.
  const std::array<Line2d, 4> sides{Line2d::through(a, b), Line2d::through(b, c), Line2d::through(c, d),
                                    Line2d::through(d, a)};
  std::array<Point2d, 4> refl;
  for (std::size_t k = 0; k < 4; ++k) refl[k] = sides[k].reflect(*focus);
  std::size_t bi = 0, bj = 1;
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = u + 1; v < 4; ++v)
      if ((refl[u] - refl[v]).norm() > (refl[bi] - refl[bj]).norm()) bi = u, bj = v;
  if ((refl[bi] - refl[bj]).norm() <= Tolerance::geo * scale) throw Error(Errc::InconsistentQuad, "focus reflections coincide");
  const Line2d directrix = Line2d::through(refl[bi], refl[bj]);
  if (directrix.distance(*focus) <= Tolerance::geo * scale) throw Error(Errc::InconsistentQuad, "focus lies on the directrix");
  const GeneralParabolad par(*focus, directrix);
  for (const Line2d& s : sides) {
    if (std::abs(par.tangency(s)) > Tolerance::alg * 10.0 * scale) {
      throw Error(Errc::InconsistentQuad, "a side is not tangent to the candidate parabola");
    }
  }
  return par;
}

DiagonalQuad quad_with_given_diagonal_point(const Circled& circle, const Point2d& e_target, const Point2d& a) {
  const Point2d& f = circle.center;
  const double r = circle.radius;
  const Vector2d to_e = e_target - f;
  if (to_e.norm() <= Tolerance::geo * r) throw Error(Errc::Validation, "E_target coincides with the center");
  if (std::abs(to_e.norm() - r) <= Tolerance::geo * r) throw Error(Errc::Validation, "E_target lies on the circle");
  if (!circle.contains(a)) throw Error(Errc::Validation, "vertex is not on the circle");
  const Vector2d u = to_e.normalized();
  const Line2d axis = Line2d::along(f, u);
  if (axis.distance(a) <= Tolerance::geo * r) throw Error(Errc::Degenerate, "vertex lies on the line through E_target and the center");

  const bool inside = to_e.norm() < r;
  const Point2d other = second_intersection(circle, a, Vector2d(e_target - a));
  if ((other - a).norm() <= Tolerance::geo * r) throw Error(Errc::Degenerate, "line from the vertex to E_target touches the circle");
  const Point2d c = axis.reflect(a);
  // Outside: E_target = AB x CD, so B is on line A E_target. Inside: E_target = AD x BC.
  const Point2d b = inside ? axis.reflect(other) : other;
  const Point2d d = inside ? other : axis.reflect(other);

  const double x_a = (a - f).dot(u) / r, x_b = (b - f).dot(u) / r;
  const double p = -(x_a + x_b);
  if (std::abs(p) <= Tolerance::geo) throw Error(Errc::DegenerateParabola, "the construction gives p = 0");
  const GeneralParabolad par(f, Line2d::along(f - p * r * u, perp(u)));
  return {make_quad({a, b, c, d}, par), par, p};
}

}  // namespace poncelet
