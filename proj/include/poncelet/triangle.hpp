#pragma once

// Triangles inscribed in the unit circle D(E) and circumscribed about the
// canonical parabola. Closure holds exactly when D(E) passes through the focus.

#include "poncelet/common_tangents.hpp"
#include "poncelet/core.hpp"
#include "poncelet/joachimsthal.hpp"

#include <array>
#include <vector>

namespace poncelet {

struct PonceletTriangle {
  std::array<Point2d, 3> vertices;
  /// Contacts of AB, AC and BC.
  std::array<Point2d, 3> contacts;
  /// Tangency residual of the closing side BC.
  double closure_residual{0.0};
  /// Two vertices coincide (A on the parabola or on a common tangent).
  bool trivial{false};
};

struct TriangleCenters {
  Point2d orthocenter;
  Point2d centroid;
  Point2d nine_point;
  Point2d circumcenter;
  /// O coincides with E, so the Euler line is undefined.
  bool degenerate_euler{false};
  /// The closed form was singular and the vertex-based computation was used.
  bool synthetic{false};
};

/// Both sides of the closure-defect identity for the two tangents from A.
struct ClosureDefect {
  /// S_BB S_CC - S_BC^2.
  double lhs;
  /// -4 p S_AA Q(E) f(A, E, p) / |A|^4.
  double rhs;
  Point2d b;
  Point2d c;
};

/// Q(E) = x_E^2 + y_E^2 - 1.
double q_of(const Point2d& e);

ClosureDefect closure_defect(const Point2d& a, const Circled& circle, const CanonicalParabolad& par);

PonceletTriangle build_triangle(const Point2d& a, const Circled& circle, const CanonicalParabolad& par);

/// Point E + t (O - E) of the Euler line; t = 1/3 is the centroid, 1/2 the nine-point center.
Point2d euler_point(const Point2d& e, const Point2d& orthocenter, double t);

/// Centers of the triangle with vertex A, from the closed form in A and E.
TriangleCenters centers(const Point2d& a, const Circled& circle, const CanonicalParabolad& par);

/// Centers from the vertices alone (altitude intersection, vertex average).
TriangleCenters synthetic_centers(const std::array<Point2d, 3>& v);

/// Nine-point circle: center midway between circumcenter and orthocenter, half the circumradius.
Circled nine_point_circle(const std::array<Point2d, 3>& v);

/// Arc of the circle between consecutive circle/parabola intersections,
/// counterclockwise from theta0 to theta1 (theta1 > theta0).
struct Arc {
  double theta0;
  double theta1;
  double length() const { return theta1 - theta0; }
};

/// Arcs of the circle lying outside the parabola (S > 0). The whole circle is
/// one arc of length 2 pi when there are no intersections and it lies outside.
std::vector<Arc> exterior_arcs(const Circled& circle, const CanonicalParabolad& par);

struct OrthocenterRange {
  /// Common-tangent points bounding the orthocenter segment.
  Point2d x;
  Point2d x_prime;
  /// Orthocenters at x and x_prime, ordered by ordinate.
  Point2d o_min;
  Point2d o_max;
  Arc arc;
};

/// One entry per exterior arc carrying at least two common-tangent points.
std::vector<OrthocenterRange> orthocenter_ranges(const Circled& circle, const CanonicalParabolad& par);

/// The range on the longest exterior arc.
OrthocenterRange orthocenter_range(const Circled& circle, const CanonicalParabolad& par);

struct TriangleWithCircle {
  PonceletTriangle triangle;
  Circled circumcircle;
};

/// Triangle with orthocenter O on the directrix whose sides AC and AB are the
/// tangents at the parabola points with ordinates y1 and y2.
TriangleWithCircle triangle_from_orthocenter(const Point2d& o, double y1, double y2, const CanonicalParabolad& par);

/// Pedal cubic of the parabola with respect to E, evaluated at M.
double pedal_curve_residual(const Point2d& m, const Point2d& e, double p);

/// Foot of the perpendicular from E to the tangent at the parabola point of parameter t.
Point2d pedal_point(double t, const Point2d& e, double p);

/// Parameters t at which the pedal curve passes through E (its double point).
/// Two values iff S(E) > 0.
std::vector<double> pedal_parameters_through_center(const Point2d& e, double p);

}  // namespace poncelet
