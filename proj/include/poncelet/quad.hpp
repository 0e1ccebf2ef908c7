#pragma once

// Quadrilaterals inscribed in a circle and circumscribed about a parabola:
// butterflies for a circle centered at the focus, and the general case where
// the directrix passes through the diagonal point L.

#include "poncelet/core.hpp"
#include "poncelet/joachimsthal.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace poncelet {

/// Vertices in tangency order: sides AB, BC, CD, DA touch the parabola.
/// For butterflies this is the self-intersecting order.
struct PonceletQuad {
  std::array<Point2d, 4> vertices;
  /// Contacts of AB, BC, CD, DA.
  std::array<Point2d, 4> contacts;
  /// AC intersect BD; empty when the diagonals are parallel.
  std::optional<Point2d> diagonal_point;
  /// Direction of the diagonals when they are parallel.
  Vector2d diagonal_direction{Vector2d::Zero()};
  /// Largest side tangency residual.
  double closure_residual{0.0};
};

struct QuadDerivedPoints {
  /// AB intersect CD and AD intersect BC; empty when the sides are parallel.
  std::optional<Point2d> i;
  std::optional<Point2d> j;
  /// Common point of the maltitudes.
  Point2d anticenter;
  /// Largest distance from the anticenter to the maltitudes not used to build it.
  double maltitude_spread{0.0};
  Point2d centroid;
  /// Through the midpoints of AC and BD; empty when they coincide.
  std::optional<Line2d> newton_gauss;
};

/// Builds the record for four vertices in tangency order.
PonceletQuad make_quad(const std::array<Point2d, 4>& v, const GeneralParabolad& par);

/// -p - x_A: abscissa of the other end of the tangent chord from A on the unit circle at the focus.
double butterfly_partner_x(double x_a, double p);

/// Butterfly with vertex A on the unit circle centered at the focus.
PonceletQuad build_butterfly(const Point2d& a, const Circled& circle, const CanonicalParabolad& par);

struct CompassTangent {
  Line2d line;
  Point2d contact;
  /// Point of the directrix at distance |AF| from A (reflection of the focus in the tangent).
  Point2d t;
};

/// Tangents from A by ruler-and-compass: 0, 1 or 2 solutions as |AF| is
/// below, at or above the distance from A to the directrix.
std::vector<CompassTangent> compass_tangents(const Point2d& focus, const Line2d& directrix, const Point2d& a);

/// Confocal parabola touching the chord AB of the unit circle at the focus.
CanonicalParabolad parabola_through_chord(const Point2d& a, const Point2d& b);

struct DiagonalPoint {
  Point2d l;
  /// Parameter of the parabola with vertical directrix through L.
  double p;
};

/// Pole of the focus polar: L = E Q(E) / |E|^2, p = -x_L.
DiagonalPoint l_point(const Point2d& e);

/// Quadrilateral from the two tangents at A; C closes the chord through L.
PonceletQuad build_quad_through_L(const Point2d& a, const Circled& circle, const CanonicalParabolad& par);

QuadDerivedPoints quad_derived_points(const PonceletQuad& q);

/// Parabola inscribed in the butterfly of an isosceles trapezoid given in convex
/// order A, B, D, C (AC parallel to BD, legs AB and CD).
std::pair<GeneralParabolad, Circled> inscribe_parabola_in_trapezoid(const Point2d& a, const Point2d& b,
                                                                  const Point2d& d, const Point2d& c);

/// Parabola touching AB, BC, CD and DA of a cyclic quadrilateral.
GeneralParabolad inscribe_parabola_in_cyclic_quad(const Point2d& a, const Point2d& b, const Point2d& c,
                                                  const Point2d& d);

struct DiagonalQuad {
  PonceletQuad quad;
  GeneralParabolad parabola;
  /// Parameter in the frame with the focus at the origin, axis toward E_target, radius 1.
  double p;
};

/// Butterfly in the circle centered at the focus whose opposite sides meet at
/// E_target (AB, CD when E_target is outside, AD, BC when inside).
DiagonalQuad quad_with_given_diagonal_point(const Circled& circle, const Point2d& e_target, const Point2d& a);

}  // namespace poncelet
