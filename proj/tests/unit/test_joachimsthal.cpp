#include <doctest.h>

#include "helpers.hpp"

using namespace poncelet;
using test::uniform;

TEST_CASE("eval_S classifies points") {
  const CanonicalParabolad par(2.0);
  CHECK(eval_S(Point2d(0, 2), par) == 0.0);
  CHECK(eval_S(Point2d(0, 0), par) == -4.0);
  CHECK(eval_S(Point2d(-2, 0), par) == 4.0);
}

TEST_CASE("polar forms and section ratios") {
  const CanonicalParabolad par(2.0);
  const Point2d a(-2, 0), b(2, 0);
  const PolarForms f = polar_forms(a, b, par);
  CHECK(f.s_aa == 4.0);
  CHECK(f.s_bb == -12.0);
  CHECK(f.s_ab == -4.0);
  CHECK(polar_value(b, a, par) == f.s_ab);
  const auto k = section_ratios(a, b, par);
  REQUIRE(k.size() == 2);
  CHECK(k[0].value == doctest::Approx(-1.0));
  CHECK(k[1].value == doctest::Approx(1.0 / 3.0));
  // Direct chord: the axis meets the parabola only at the vertex (-1, 0) and at infinity.
  const Point2d t(-1, 0);
  CHECK((t - a).norm() / (b - t).norm() == doctest::Approx(1.0 / 3.0));

  const Point2d on = par.point_at_y(1.7);
  const PolarForms z = polar_forms(on, on, par);
  CHECK(std::abs(z.s_aa) < 1e-12);
  CHECK(std::abs(z.s_ab) < 1e-12);
}

TEST_CASE("section equation oracle on random chords") {
  for (int n = 0; n < 200; ++n) {
    const CanonicalParabolad par(uniform(-2, 2) + 2.5);
    const Point2d a(uniform(-3, 3), uniform(-3, 3)), b(uniform(-3, 3), uniform(-3, 3));
    // Intersect the segment parametrization a + t (b - a) with the parabola directly.
    const Vector2d d = b - a;
    const double qa = d.y() * d.y(), qb = 2 * a.y() * d.y() - 2 * par.p * d.x(), qc = par.eval(a);
    if (std::abs(qa) < 1e-6) continue;
    const double disc = qb * qb - 4 * qa * qc;
    if (disc <= 1e-6) continue;
    std::vector<double> direct;
    for (double s : {-1.0, 1.0}) {
      const double t = (-qb + s * std::sqrt(disc)) / (2 * qa);
      if (std::abs(1 - t) < 1e-6) continue;
      direct.push_back(t / (1 - t));  // signed |AT| / |TB|
    }
    std::sort(direct.begin(), direct.end());
    const auto k = section_ratios(a, b, par);
    REQUIRE(k.size() == direct.size());
    for (std::size_t i = 0; i < k.size(); ++i)
      CHECK(k[i].value == doctest::Approx(direct[i]).epsilon(1e-8));
  }
}

TEST_CASE("tangency criterion") {
  const CanonicalParabolad par(2.0);
  CHECK(std::abs(polar_forms(Point2d(-1, 2), Point2d(3, 4), par).tangency_residual()) < 1e-12);
  for (int n = 0; n < 1000; ++n) {
    const double p = uniform(0.3, 2.0) * (n % 2 ? 1 : -1);
    const CanonicalParabolad q(p);
    const Point2d a(uniform(-3, 3), uniform(-3, 3));
    const bool make_tangent = n % 3 == 0;
    Line2d l = Line2d::with_slope(a, uniform(-3, 3));
    if (make_tangent) l = q.tangent_at_y(uniform(-3, 3));
    const Point2d u = l.anchor(), w = l.anchor() + 1.7 * l.direction();
    const double joach = polar_forms(u, w, q).tangency_residual() / std::pow(1.7, 2);
    const double subst = test::substitution_discriminant(l, p);
    CHECK((std::abs(joach) <= 1e-9) == (std::abs(subst) <= 1e-9));
  }
}

TEST_CASE("tangents from a point") {
  const CanonicalParabolad par(2.0);
  SUBCASE("vertical case") {
    const TangentPair t = tangents_from_point(Point2d(-1, 2), par);
    REQUIRE(t.tangents.size() == 2);
    CHECK_FALSE(t.tangents[0].slope.has_value());
    CHECK(t.tangents[0].line.is_vertical());
    CHECK(-t.tangents[0].line.c() == doctest::Approx(-1.0));
    REQUIRE(t.tangents[1].slope.has_value());
    CHECK(*t.tangents[1].slope == doctest::Approx(0.5));
  }
  SUBCASE("point on the directrix") {
    const TangentPair t = tangents_from_point(Point2d(-2, 0), par);
    REQUIRE(t.tangents.size() == 2);
    CHECK(*t.tangents[0].slope * *t.tangents[1].slope == doctest::Approx(-1.0));
    CHECK(std::abs(*t.tangents[0].slope) == doctest::Approx(1.0));
  }
  SUBCASE("point on the parabola") {
    const TangentPair t = tangents_from_point(Point2d(0, 2), par);
    CHECK(t.degenerate);
    REQUIRE(t.tangents.size() == 1);
    // dy/dx = p / y at (0, 2).
    CHECK(*t.tangents[0].slope == doctest::Approx(1.0));
  }
  SUBCASE("vertex") {
    const TangentPair t = tangents_from_point(par.vertex(), par);
    CHECK(t.degenerate);
    CHECK(t.at_vertex);
  }
  SUBCASE("inside") { CHECK_THROWS_AS(tangents_from_point(Point2d(0, 0), par), Error); }
}

TEST_CASE("Vieta relations and contacts") {
  for (int n = 0; n < 500; ++n) {
    const CanonicalParabolad par(uniform(0.2, 2.5) * (n % 2 ? 1 : -1));
    const Point2d a(uniform(-4, 4), uniform(-4, 4));
    if (eval_S(a, par) <= 1e-3) continue;
    const TangentPair t = tangents_from_point(a, par);
    REQUIRE(t.tangents.size() == 2);
    for (const Tangent& tg : t.tangents) {
      CHECK(std::abs(eval_S(tg.contact, par)) < 1e-9 * std::max(1.0, tg.contact.squaredNorm()));
      CHECK(tg.line.distance(tg.contact) < 1e-9 * std::max(1.0, tg.contact.norm()));
      CHECK(tg.line.distance(a) < 1e-12 * std::max(1.0, a.norm()));
    }
    const double den = 2 * a.x() + par.p;
    if (std::abs(den) > 1e-2) {
      const double m1 = *t.tangents[0].slope, m2 = *t.tangents[1].slope;
      CHECK(m1 + m2 == doctest::Approx(2 * a.y() / den).epsilon(1e-9));
      CHECK(m1 * m2 == doctest::Approx(par.p / den).epsilon(1e-9));
      CHECK((std::abs(m1 * m2 + 1) <= 1e-8) == (std::abs(a.x() + par.p) <= 1e-8));
    }
  }
}

TEST_CASE("tangent-circle intersections") {
  const Circled c(Point2d(0, 1), 1.0);
  const CanonicalParabolad par(1.0);
  const Point2d a(0, 2);
  const TangentPair t = tangents_from_point(a, par);
  REQUIRE(t.tangents.size() == 2);
  for (const Tangent& tg : t.tangents) {
    const double m = *tg.slope;
    const auto pts = tangent_circle_intersections(a, m, c);
    REQUIRE(pts.size() == 2);
    const Point2d other = (pts[0] - a).norm() > (pts[1] - a).norm() ? pts[0] : pts[1];
    CHECK(second_intersection_x(a, m, c.center) == doctest::Approx(other.x()).epsilon(1e-12));
    for (const Point2d& q : pts) CHECK(std::abs(c.power(q)) < 1e-12);
  }
  // Slopes 1 / (2 +- sqrt 3).
  std::vector<double> slopes{*t.tangents[0].slope, *t.tangents[1].slope};
  std::sort(slopes.begin(), slopes.end());
  CHECK(slopes[0] == doctest::Approx(1.0 / (2.0 + std::sqrt(3.0))).epsilon(1e-12));
  CHECK(slopes[1] == doctest::Approx(1.0 / (2.0 - std::sqrt(3.0))).epsilon(1e-12));
  CHECK(tangent_circle_intersections(Point2d(5, 5), 0.0, c).empty());
}

TEST_CASE("slope of CC'") {
  const CanonicalParabolad par(1.0);
  CHECK_FALSE(slope_CC(Point2d(0, 2), Circled(Point2d(0, 1), 1.0), par).has_value());
  CHECK_THROWS_AS(slope_CC(Point2d(0, 0), Circled(Point2d(0, 1), 1.0), par), Error);
  int checked = 0;
  for (int n = 0; n < 300; ++n) {
    const Point2d e(uniform(-2, 2), uniform(-2, 2));
    const CanonicalParabolad q(uniform(0.2, 2) * (n % 2 ? 1 : -1));
    const Circled c(e, 1.0);
    const auto a = test::exterior_point(e, q, 1e-2);
    if (!a) continue;
    const auto m = slope_CC(*a, c, q);
    if (!m) continue;
    const TangentPair t = tangents_from_point(*a, q);
    const Point2d c1 = second_intersection(c, *a, t.tangents[0].line.direction());
    const Point2d c2 = second_intersection(c, *a, t.tangents[1].line.direction());
    if (std::abs(c2.x() - c1.x()) < 1e-3) continue;
    CHECK(*m == doctest::Approx((c2.y() - c1.y()) / (c2.x() - c1.x())).epsilon(1e-7));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("common tangency residual") {
  const double p = 1.0;
  const CanonicalParabolad par(p);
  CHECK(std::abs(common_tangency_residual(Point2d(-p / 2, std::sqrt(4 - p * p) / 2), Circled(Point2d(0, 0), 1.0), par)) < 1e-15);
  for (double q : {-1.3, 0.4, 2.0}) {
    CHECK(common_tangency_residual(Point2d(1, 1), Circled(Point2d(0, 1), 1.0), CanonicalParabolad(q)) == doctest::Approx(q + 2));
    CHECK(common_tangency_residual(Point2d(0.3, 0.2), Circled(Point2d(0.3, 0.2), 1.0), CanonicalParabolad(q)) == doctest::Approx(q));
  }
  // On the unit circle f equals the tangency residual of the circle tangent.
  for (int n = 0; n < 200; ++n) {
    const Point2d e(uniform(-2, 2), uniform(-2, 2));
    const CanonicalParabolad q(uniform(0.2, 2) * (n % 2 ? 1 : -1));
    const Circled c(e, 1.0);
    const Point2d a = c.at(uniform(0, 6.3));
    const Line2d tl = c.tangent_at(a);
    // f vanishes iff the circle tangent touches the parabola.
    const double f = common_tangency_residual(a, c, q);
    const double g = q.tangency(tl);
    CHECK(std::abs(std::abs(f) - std::abs(g)) < 1e-12 * std::max(1.0, std::abs(f)));
  }
}
