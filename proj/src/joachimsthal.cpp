#include "poncelet/joachimsthal.hpp"

#include <algorithm>
#include <cmath>

namespace poncelet {

double eval_S(const Point2d& a, const CanonicalParabolad& par) { return par.eval(a); }

double polar_value(const Point2d& a, const Point2d& b, const CanonicalParabolad& par) {
  const double p = par.p;
  return a.y() * b.y() - p * (a.x() + b.x()) - p * p;
}

PolarForms polar_forms(const Point2d& a, const Point2d& b, const CanonicalParabolad& par) {
  return {eval_S(a, par), polar_value(a, b, par), eval_S(b, par)};
}

std::vector<Root<double>> section_ratios(const Point2d& a, const Point2d& b, const CanonicalParabolad& par) {
  const PolarForms f = polar_forms(a, b, par);
  return solve_quadratic(f.s_bb, 2.0 * f.s_ab, f.s_aa);
}

std::vector<double> contact_ordinates(const Point2d& a, const CanonicalParabolad& par, double on_curve_tol) {
  const double s = eval_S(a, par);
  const double p = par.p;
  if (s < -Tolerance::alg) throw Error(Errc::PointInsideParabola, "no real tangents from a point inside the parabola");
  if (s <= on_curve_tol) return {a.y()};
  const double root = std::sqrt(s);
  // y_c^2 - 2 y_A y_c + p (2 x_A + p) = 0
  const double far = a.y() + std::copysign(root, a.y() == 0.0 ? 1.0 : a.y());
  double near = p * (2.0 * a.x() + p) / far;
  if (std::abs(2.0 * a.x() + p) <= Tolerance::geo) near = 0.0;
  std::vector<double> out{far, near};
  std::sort(out.begin(), out.end());
  return out;
}

TangentPair tangents_from_point(const Point2d& a, const CanonicalParabolad& par, double on_curve_tol) {
  const double p = par.p;
  TangentPair pair;
  const std::vector<double> ys = contact_ordinates(a, par, on_curve_tol);
  pair.degenerate = ys.size() == 1;
  for (double yc : ys) {
    Tangent t{Line2d::along(a, par.tangent_direction_at_y(yc)), std::nullopt, par.point_at_y(yc)};
    if (pair.degenerate) t.contact = a;
    if (std::abs(yc) > Tolerance::geo * std::max(1.0, std::abs(p))) {
      t.slope = p / yc;
    } else {
      t.line = Line2d::vertical(-p / 2.0);
      t.contact = par.vertex();
    }
    pair.tangents.push_back(t);
  }
  pair.at_vertex = pair.degenerate && !pair.tangents.front().slope.has_value();
  return pair;
}

std::vector<Point2d> tangent_circle_intersections(const Point2d& a, const Vector2d& direction, const Circled& circle) {
  return intersect(circle, a, direction);
}

std::vector<Point2d> tangent_circle_intersections(const Point2d& a, double slope, const Circled& circle) {
  return intersect(circle, a, Vector2d(1.0, slope));
}

double second_intersection_x(const Point2d& a, double m, const Point2d& e) {
  return ((m * m - 1.0) * a.x() - 2.0 * m * (a.y() - e.y()) + 2.0 * e.x()) / (m * m + 1.0);
}

std::optional<double> slope_CC(const Point2d& a, const Circled& circle, const CanonicalParabolad& par) {
  const Point2d& e = circle.center;
  if (eval_S(a, par) <= Tolerance::alg) {
    throw Error(Errc::NotApplicable, "chord slope needs two distinct tangents (S_AA > 0)");
  }
  const double den = a.x() * e.y() - a.y() * e.x();
  const double num = a.squaredNorm() - a.dot(e);
  if (std::abs(den) <= Tolerance::alg * std::max(1.0, std::abs(num))) return std::nullopt;
  return -num / den;
}

double common_tangency_residual(const Point2d& a, const Circled& circle, const CanonicalParabolad& par) {
  const Point2d& e = circle.center;
  return par.p + 2.0 * (a.x() - e.x()) * (a.dot(e) - e.squaredNorm() + 1.0);
}

}  // namespace poncelet
