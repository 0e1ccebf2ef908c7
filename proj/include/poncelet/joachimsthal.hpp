#pragma once

// Polar-form calculus for the canonical parabola y^2 = 2 p x + p^2 and the
// tangent constructions built on it. Every function here assumes the
// normalized frame: focus at the origin, axis along x, unit circle.

#include "poncelet/core.hpp"
#include "poncelet/polynomial.hpp"

#include <optional>
#include <vector>

namespace poncelet {

struct PolarForms {
  double s_aa;
  double s_ab;
  double s_bb;

  /// S_AA S_BB - S_AB^2; zero iff line AB touches the conic.
  double tangency_residual() const { return s_aa * s_bb - s_ab * s_ab; }
};

/// One tangent from an external point, identified by its contact ordinate.
struct Tangent {
  Line2d line;
  /// dy/dx, absent for the vertical tangent.
  std::optional<double> slope;
  Point2d contact;
};

struct TangentPair {
  /// Sorted by contact ordinate ascending.
  std::vector<Tangent> tangents;
  /// The point lies on the parabola and only its own tangent exists.
  bool degenerate{false};
  /// The point is the vertex (-p/2, 0); the only tangent is the vertical x = -p/2.
  bool at_vertex{false};
};

/// S(A) = y_A^2 - 2 p x_A - p^2.
double eval_S(const Point2d& a, const CanonicalParabolad& par);

/// S_AB = y_A y_B - p (x_A + x_B) - p^2.
double polar_value(const Point2d& a, const Point2d& b, const CanonicalParabolad& par);

PolarForms polar_forms(const Point2d& a, const Point2d& b, const CanonicalParabolad& par);

/// Roots k of S_BB k^2 + 2 S_AB k + S_AA = 0: the ratios |AT|/|TB| in which
/// the parabola divides segment AB (negative when T is outside the segment).
std::vector<Root<double>> section_ratios(const Point2d& a, const Point2d& b, const CanonicalParabolad& par);

/// Contact ordinates y_A +- sqrt(S_AA) of the tangents through A, ascending.
/// The smaller-magnitude one is taken from the product p (2 x_A + p).
/// A single ordinate is returned when S_AA <= on_curve_tol.
std::vector<double> contact_ordinates(const Point2d& a, const CanonicalParabolad& par,
                                      double on_curve_tol = Tolerance::alg);

/// Tangents from A. Throws PointInsideParabola when S_AA < -alg.
TangentPair tangents_from_point(const Point2d& a, const CanonicalParabolad& par, double on_curve_tol = Tolerance::alg);

/// Real intersections of the line through A with the given direction (or slope) and the circle.
std::vector<Point2d> tangent_circle_intersections(const Point2d& a, const Vector2d& direction, const Circled& circle);
std::vector<Point2d> tangent_circle_intersections(const Point2d& a, double slope, const Circled& circle);

/// Abscissa of the second intersection of the line of slope m through A on
/// the unit circle centered at E, in closed form.
double second_intersection_x(const Point2d& a, double m, const Point2d& e);

/// Slope of the chord joining the second intersections of the two tangents
/// from A (on the unit circle). Absent when A, E and the focus are collinear.
std::optional<double> slope_CC(const Point2d& a, const Circled& circle, const CanonicalParabolad& par);

/// f(A, E, p) = p + 2 (x_A - x_E)(x_A x_E + y_A y_E - x_E^2 - y_E^2 + 1).
/// On the unit circle it vanishes exactly where the circle tangent at A also
/// touches the parabola.
double common_tangency_residual(const Point2d& a, const Circled& circle, const CanonicalParabolad& par);

}  // namespace poncelet
