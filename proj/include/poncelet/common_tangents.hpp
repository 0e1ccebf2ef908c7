#pragma once

#include "poncelet/core.hpp"
#include "poncelet/joachimsthal.hpp"

#include <array>
#include <complex>
#include <optional>
#include <vector>

namespace poncelet {

/// The conic carrying the points of common tangents on the unit circle.
struct CommonTangentLocus {
  enum class Kind { Hyperbola, ParallelLinePair, DoubleLine };
  Kind kind;
  ConicMatrixd matrix;
  /// Real lines of the degenerate kinds; empty for the hyperbola or when the
  /// line pair is complex.
  std::vector<Line2d> lines;
};

struct CommonTangentSet {
  std::vector<Point2d> points;
  /// Tangent to the circle at each point (also tangent to the parabola).
  std::vector<Line2d> tangents;
  /// |f(A, E, p)| at each point.
  std::vector<double> residuals;
  /// Point also satisfies 2 x + p = 0 (vertical common tangent).
  std::vector<bool> on_vertical_branch;
};

/// Coefficients (highest first) of the quartic whose roots are the abscissae
/// of common-tangent points on the unit circle centered at e.
std::array<double, 5> common_tangent_quartic(const Point2d& e, double p);

/// Matrix, kind and degenerate lines of the locus conic.
CommonTangentLocus h_conic(const Point2d& e, double p);

/// All points on the unit circle where a common tangent touches it (at most 4).
CommonTangentSet common_tangent_points(const Circled& circle, const CanonicalParabolad& par);

/// det(lambda A + B) = c3 lambda^3 + c2 lambda^2 + c1 lambda + c0.
std::array<double, 4> pencil_cubic(const ConicMatrixd& a, const ConicMatrixd& b);

/// Number of distinct real lambda with det(lambda A + B) = 0.
int count_real_degenerate(const ConicMatrixd& a, const ConicMatrixd& b);

/// Discriminant of the pencil cubic in lambda.
double pencil_discriminant(const ConicMatrixd& a, const ConicMatrixd& b);

/// Matrix of the circle x^2 + y^2 - 2 (x x_E + y y_E) = 0 (unit circle
/// through the focus, centered at e with |e| = 1).
ConicMatrixd circle_through_focus(const Point2d& e);

/// For a circle through the focus: maps a circle/parabola intersection point
/// to the circle point reached along its tangent (a common-tangent point), and
/// a common-tangent point to the intersection reached along its other tangent.
Point2d correspondence_partner(const Point2d& a, const Circled& circle, const CanonicalParabolad& par);

/// Synthetic common-tangent test at the second point B of the tangent at a
/// transversal intersection A: compares the direction from T2 to the focus
/// with the direction BE, where T2 is the second point of the circle about B
/// through the focus on the directrix.
struct FocalKiteTest {
  Point2d b;
  Point2d t1;
  Point2d t2;
  /// |sin| of the angle between T2F and BE.
  double parallel_defect;
  /// f(B, E, p).
  double residual;
};
FocalKiteTest focal_kite_test(const Point2d& a, const Circled& circle, const CanonicalParabolad& par);

/// Circle/parabola intersection points (from the quartic in y), sorted by angle about the circle center.
std::vector<Point2d> circle_parabola_intersections(const Circled& circle, const CanonicalParabolad& par);

}  // namespace poncelet
