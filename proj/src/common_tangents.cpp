#include "poncelet/common_tangents.hpp"

#include "poncelet/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace poncelet {

namespace {

bool near_focus(const Point2d& e) { return e.norm() <= Tolerance::geo; }

/// Newton refinement of a common-tangent point on (|A - E|^2 = 1, f(A) = 0).
Point2d polish_common_point(Point2d a, const Point2d& e, double p) {
  const double k = e.squaredNorm() - 1.0;
  auto residual = [&](const Point2d& x) {
    return Vector2d((x - e).squaredNorm() - 1.0, p + 2.0 * (x.x() - e.x()) * (x.dot(e) - k));
  };
  Vector2d r = residual(a);
  for (int i = 0; i < 4 && r.norm() > 0.0; ++i) {
    Eigen::Matrix2d jac;
    jac << 2.0 * (a.x() - e.x()), 2.0 * (a.y() - e.y()),
        2.0 * (a.dot(e) - k) + 2.0 * (a.x() - e.x()) * e.x(), 2.0 * (a.x() - e.x()) * e.y();
    const double det = jac.determinant();
    if (std::abs(det) < 1e-14) break;
    const Point2d next = a - jac.inverse() * r;
    const Vector2d rn = residual(next);
    if (!(rn.norm() < r.norm())) break;
    a = next;
    r = rn;
  }
  return a;
}

void add_unique(CommonTangentSet& set, const Point2d& a, const Circled& circle, const CanonicalParabolad& par) {
  for (const Point2d& q : set.points) {
    if ((q - a).norm() <= Tolerance::geo) return;
  }
  set.points.push_back(a);
  set.tangents.push_back(circle.tangent_at(a));
  set.residuals.push_back(std::abs(common_tangency_residual(a, circle, par)));
  set.on_vertical_branch.push_back(std::abs(2.0 * a.x() + par.p) <= Tolerance::geo);
}

bool accept(const Point2d& a, const Circled& circle, const CanonicalParabolad& par) {
  return is_finite(a) && circle.contains(a) &&
         std::abs(common_tangency_residual(a, circle, par)) <= 10.0 * Tolerance::alg;
}

}  // namespace

std::array<double, 5> common_tangent_quartic(const Point2d& e, double p) {
  const double x = e.x(), y = e.y();
  const double x2 = x * x, y2 = y * y;
  return {
      4.0 * (x2 + y2),
      -8.0 * x * (2.0 * x2 + 2.0 * y2 - 1.0),
      4.0 * (6.0 * x2 * x2 + 6.0 * x2 * y2 - 6.0 * x2 - y2 + p * x + 1.0),
      -4.0 * (2.0 * x2 - 1.0) * (2.0 * x2 * x + 2.0 * x * y2 + p - 2.0 * x),
      4.0 * x2 * (x2 * x2 + x2 * y2 - 2.0 * x2 - y2 + p * x) + (p - 2.0 * x) * (p - 2.0 * x),
  };
}

CommonTangentLocus h_conic(const Point2d& e, double p) {
  const double x = e.x(), y = e.y();
  const double k = -2.0 * x * x - y * y + 1.0;
  Eigen::Matrix3d m;
  m << 2.0 * x, y, k,
      y, 0.0, -x * y,
      k, -x * y, p + 2.0 * x * (x * x + y * y - 1.0);
  CommonTangentLocus locus{CommonTangentLocus::Kind::Hyperbola, ConicMatrixd(m), {}};
  if (std::abs(y) > Tolerance::geo) return locus;
  if (std::abs(x) > Tolerance::geo) {
    locus.kind = CommonTangentLocus::Kind::ParallelLinePair;
    const double disc = 1.0 - 2.0 * p * x;
    if (disc >= 0.0) {
      const double r = std::sqrt(disc);
      locus.lines.push_back(Line2d::vertical((2.0 * x * x - 1.0 - r) / (2.0 * x)));
      locus.lines.push_back(Line2d::vertical((2.0 * x * x - 1.0 + r) / (2.0 * x)));
    }
    return locus;
  }
  locus.kind = CommonTangentLocus::Kind::DoubleLine;
  locus.lines.push_back(Line2d::vertical(-p / 2.0));
  return locus;
}

CommonTangentSet common_tangent_points(const Circled& circle, const CanonicalParabolad& par) {
  const Point2d& e = circle.center;
  const double p = par.p;
  CommonTangentSet set;
  if (near_focus(e)) {
    if (std::abs(p) > 2.0 + Tolerance::geo) return set;
    const double h = std::sqrt(std::max(0.0, 4.0 - p * p)) / 2.0;
    add_unique(set, Point2d(-p / 2.0, -h), circle, par);
    add_unique(set, Point2d(-p / 2.0, h), circle, par);
    return set;
  }

  std::vector<Point2d> candidates;
  if (std::abs(e.y()) <= Tolerance::geo) {
    // f is independent of y here: a quadratic in x, the two vertical lines of the locus.
    for (const Root<double>& r : solve_quadratic(2.0 * e.x(), -2.0 * (2.0 * e.x() * e.x() - 1.0),
                                                 p + 2.0 * e.x() * (e.x() * e.x() - 1.0))) {
      const double dx = r.value - e.x();
      if (std::abs(dx) > 1.0 + Tolerance::geo) continue;
      const double h = std::sqrt(std::max(0.0, 1.0 - dx * dx));
      candidates.emplace_back(r.value, e.y() - h);
      candidates.emplace_back(r.value, e.y() + h);
    }
  } else {
    const auto q = common_tangent_quartic(e, p);
    for (const Root<double>& r : solve_quartic(q[0], q[1], q[2], q[3], q[4])) {
      const double x = r.value;
      if (std::abs(x - e.x()) < Tolerance::geo) continue;
      const double xe = e.x(), ye = e.y();
      const double y = (-p - 2.0 * x * x * xe + 4.0 * x * xe * xe + 2.0 * x * ye * ye - 2.0 * x -
                        2.0 * xe * xe * xe - 2.0 * xe * ye * ye + 2.0 * xe) /
                       (2.0 * ye * (x - xe));
      candidates.push_back(polish_common_point(Point2d(x, y), e, p));
    }
  }
  for (const Point2d& a : candidates) {
    if (accept(a, circle, par)) add_unique(set, a, circle, par);
  }
  std::vector<std::size_t> order(set.points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return set.points[i].y() < set.points[j].y();
  });
  CommonTangentSet sorted;
  for (std::size_t i : order) {
    sorted.points.push_back(set.points[i]);
    sorted.tangents.push_back(set.tangents[i]);
    sorted.residuals.push_back(set.residuals[i]);
    sorted.on_vertical_branch.push_back(set.on_vertical_branch[i]);
  }
  return sorted;
}

std::array<double, 4> pencil_cubic(const ConicMatrixd& a, const ConicMatrixd& b) {
  std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};
  // det is multilinear in columns: each mask picks the columns taken from A.
  for (int mask = 0; mask < 8; ++mask) {
    Eigen::Matrix3d m;
    int from_a = 0;
    for (int j = 0; j < 3; ++j) {
      const bool use_a = (mask >> j) & 1;
      m.col(j) = use_a ? a.matrix().col(j) : b.matrix().col(j);
      from_a += use_a ? 1 : 0;
    }
    c[static_cast<std::size_t>(3 - from_a)] += m.determinant();
  }
  return c;
}

int count_real_degenerate(const ConicMatrixd& a, const ConicMatrixd& b) {
  const auto c = pencil_cubic(a, b);
  const double scale = std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2]), std::abs(c[3])});
  const double ref = std::max(a.matrix().cwiseAbs().maxCoeff(), b.matrix().cwiseAbs().maxCoeff());
  if (scale <= 1e-14 * std::max(1.0, ref * ref * ref)) {
    throw Error(Errc::DegeneratePencil, "pencil determinant vanishes identically");
  }
  return static_cast<int>(solve_cubic(c[0], c[1], c[2], c[3]).size());
}

double pencil_discriminant(const ConicMatrixd& a, const ConicMatrixd& b) {
  const auto c = pencil_cubic(a, b);
  return cubic_discriminant(c[0], c[1], c[2], c[3]);
}

ConicMatrixd circle_through_focus(const Point2d& e) {
  return ConicMatrixd::from_coefficients(1.0, 0.0, 1.0, -e.x(), -e.y(), 0.0);
}

Point2d correspondence_partner(const Point2d& a, const Circled& circle, const CanonicalParabolad& par) {
  const Point2d& e = circle.center;
  if (std::abs(circle.radius - 1.0) > Tolerance::alg) throw Error(Errc::NotApplicable, "circle must be normalized");
  if (std::abs(e.squaredNorm() - 1.0) > Tolerance::alg) {
    throw Error(Errc::NotApplicable, "the circle does not pass through the focus");
  }
  if (!circle.contains(a)) throw Error(Errc::NotApplicable, "point is not on the circle");
  const bool on_parabola = std::abs(eval_S(a, par)) <= Tolerance::alg;
  const bool common = std::abs(common_tangency_residual(a, circle, par)) <= 10.0 * Tolerance::alg;
  if (on_parabola == common) {
    throw Error(Errc::NotApplicable, on_parabola ? "circle and parabola are tangent at the point"
                                                 : "point is neither on the parabola nor on a common tangent");
  }
  if (on_parabola) return second_intersection(circle, a, par.tangent_direction_at_y(a.y()));
  const TangentPair pair = tangents_from_point(a, par);
  // The common tangent is orthogonal to the radius; take the other one.
  const Vector2d radius = (a - e).normalized();
  const Tangent* other = &pair.tangents.front();
  for (const Tangent& t : pair.tangents) {
    if (std::abs(t.line.direction().dot(radius)) > std::abs(other->line.direction().dot(radius))) other = &t;
  }
  return second_intersection(circle, a, other->line.direction());
}

FocalKiteTest focal_kite_test(const Point2d& a, const Circled& circle, const CanonicalParabolad& par) {
  if (std::abs(eval_S(a, par)) > Tolerance::alg || !circle.contains(a)) {
    throw Error(Errc::NotApplicable, "point must lie on both the circle and the parabola");
  }
  const Point2d focus = par.focus();
  const Line2d directrix = par.directrix();
  FocalKiteTest out{};
  out.b = second_intersection(circle, a, par.tangent_direction_at_y(a.y()));
  out.t1 = directrix.project(a);
  const std::vector<Point2d> hits = intersect(Circled(out.b, (out.b - focus).norm()), directrix);
  if (hits.empty()) throw Error(Errc::Configuration, "circle about B misses the directrix");
  out.t2 = (hits[0] - out.t1).norm() > (hits[1] - out.t1).norm() ? hits[0] : hits[1];
  const Vector2d u = focus - out.t2, v = circle.center - out.b;
  out.parallel_defect = std::abs(cross(u, v)) / (u.norm() * v.norm());
  out.residual = common_tangency_residual(out.b, circle, par);
  return out;
}

std::vector<Point2d> circle_parabola_intersections(const Circled& circle, const CanonicalParabolad& par) {
  const double p = par.p, xe = circle.center.x(), ye = circle.center.y(), r = circle.radius;
  // x = (y^2 - p^2) / (2p) substituted into the circle, times 4 p^2.
  const double k = p * p + 2.0 * p * xe;
  const double c0 = k * k + 4.0 * p * p * (ye * ye - r * r);
  std::vector<Point2d> pts;
  for (const Root<double>& root : solve_quartic(1.0, 0.0, 2.0 * p * p - 4.0 * p * xe, -8.0 * p * p * ye, c0)) {
    const Point2d q = par.point_at_y(root.value);
    if (circle.contains(q, 1e-7)) pts.push_back(q);
  }
  std::sort(pts.begin(), pts.end(), [&](const Point2d& u, const Point2d& v) {
    return std::atan2(u.y() - ye, u.x() - xe) < std::atan2(v.y() - ye, v.x() - xe);
  });
  return pts;
}

}  // namespace poncelet
