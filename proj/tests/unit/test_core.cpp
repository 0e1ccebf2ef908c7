#include <doctest.h>

#include "helpers.hpp"

using namespace poncelet;
using test::uniform;

TEST_CASE("line canonical representative") {
  const Line2d l(-3.0, 4.0, 10.0);
  CHECK(l.a() == doctest::Approx(0.6));
  CHECK(l.b() == doctest::Approx(-0.8));
  CHECK(l.c() == doctest::Approx(-2.0));
  const Line2d h(0.0, -2.0, 4.0);
  CHECK(h.b() == doctest::Approx(1.0));
  CHECK(h.c() == doctest::Approx(-2.0));
  CHECK_THROWS_AS(Line2d(0.0, 0.0, 1.0), Error);
  CHECK(Line2d::vertical(-1.0).is_vertical());
  CHECK_FALSE(Line2d::vertical(-1.0).slope().has_value());
}

TEST_CASE("circle and line intersections") {
  const Circled c(Point2d(1.0, 2.0), 2.0);
  const auto pts = intersect(c, Line2d::horizontal(2.0));
  REQUIRE(pts.size() == 2);
  CHECK(std::min(pts[0].x(), pts[1].x()) == doctest::Approx(-1.0));
  CHECK(std::max(pts[0].x(), pts[1].x()) == doctest::Approx(3.0));
  CHECK(pts[0].y() == doctest::Approx(2.0));
  CHECK(intersect(c, Line2d::horizontal(5.0)).empty());
  const Point2d a = c.at(0.3);
  const Point2d b = second_intersection(c, a, Vector2d(1.0, -0.4));
  CHECK(c.contains(b, 1e-14));
  CHECK(std::abs(cross(Vector2d(b - a), Vector2d(1.0, -0.4))) < 1e-14);
}

TEST_CASE("circumcircle") {
  const auto c = circumcircle(Point2d(1, 0), Point2d(0, 1), Point2d(-1, 0));
  REQUIRE(c);
  CHECK(c->center.norm() < 1e-15);
  CHECK(c->radius == doctest::Approx(1.0));
  CHECK_FALSE(circumcircle(Point2d(0, 0), Point2d(1, 1), Point2d(2, 2)));
}

TEST_CASE("canonical parabola basics") {
  CHECK_THROWS_AS(CanonicalParabolad(0.0), Error);
  const CanonicalParabolad par(2.0);
  CHECK(par.eval(Point2d(0.0, 2.0)) == 0.0);
  CHECK(par.eval(par.focus()) == -4.0);
  CHECK(par.eval(par.point(0.7)) == doctest::Approx(0.0));
  CHECK(par.tangency(par.tangent_at_y(1.3)) == doctest::Approx(0.0));
}

TEST_CASE("general parabola agrees with canonical one") {
  const CanonicalParabolad can(-0.7);
  const GeneralParabolad gen = GeneralParabolad::from(can);
  for (int k = 0; k < 50; ++k) {
    const Point2d x(uniform(-3, 3), uniform(-3, 3));
    CHECK(gen.eval(x) == doctest::Approx(can.eval(x)).epsilon(1e-12));
    const Line2d t = can.tangent_at_y(uniform(-3, 3));
    CHECK(std::abs(gen.tangency(t)) < 1e-12);
    const Point2d q = gen.contact(t);
    CHECK(std::abs(can.eval(q)) < 1e-11);
  }
  CHECK_THROWS_AS(GeneralParabolad(Point2d(0, 0), Line2d::vertical(0.0)), Error);
}

TEST_CASE("focal property: tangent bisects focal ray and axis-parallel ray") {
  for (int k = 0; k < 100; ++k) {
    const CanonicalParabolad par(uniform(0.2, 3.0) * (k % 2 ? 1.0 : -1.0));
    const double y = uniform(-4, 4);
    const Point2d x = par.point_at_y(y);
    const Vector2d t = par.tangent_direction_at_y(y).normalized();
    const Vector2d to_focus = (par.focus() - x).normalized();
    // Ray away from the directrix.
    const Vector2d away(par.p > 0 ? 1.0 : -1.0, 0.0);
    const double a1 = std::acos(std::clamp(std::abs(t.dot(to_focus)), -1.0, 1.0));
    const double a2 = std::acos(std::clamp(std::abs(t.dot(away)), -1.0, 1.0));
    CHECK(std::abs(a1 - a2) < 1e-9);
  }
}

TEST_CASE("conic matrices") {
  const Circled c(Point2d(0.5, -1.0), 2.0);
  const auto m = ConicMatrixd::of(c);
  CHECK(m.eval(c.at(1.1)) == doctest::Approx(0.0).epsilon(1e-12));
  const CanonicalParabolad par(1.5);
  const auto mp = ConicMatrixd::of(par);
  const Point2d a(0.3, 2.0), b(-1.0, 0.4);
  CHECK(mp.eval(a) == doctest::Approx(par.eval(a)));
  CHECK(mp.polar(a, b) == doctest::Approx(polar_value(a, b, par)));
  const auto mg = ConicMatrixd::of(GeneralParabolad::from(par));
  CHECK((mg.matrix() - mp.matrix()).norm() < 1e-14);
}
