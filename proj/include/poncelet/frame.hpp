#pragma once

#include "poncelet/core.hpp"

#include <Eigen/Geometry>

namespace poncelet {

/// x -> scale * R(angle) * x + translation.
template <typename Scalar>
class Similarity {
 public:
  Similarity() = default;
  Similarity(Scalar angle, const Vector2<Scalar>& translation, Scalar scale)
      : angle_(angle), translation_(translation), scale_(scale) {
    if (!(scale > Scalar(0)) || !std::isfinite(scale)) throw Error(Errc::Validation, "similarity scale must be positive");
  }

  static Similarity identity() { return Similarity(); }

  Scalar angle() const { return angle_; }
  const Vector2<Scalar>& translation() const { return translation_; }
  Scalar scale() const { return scale_; }

  Eigen::Matrix<Scalar, 2, 2> linear() const {
    return scale_ * Eigen::Rotation2D<Scalar>(angle_).toRotationMatrix();
  }

  Point2<Scalar> apply(const Point2<Scalar>& x) const { return linear() * x + translation_; }
  Vector2<Scalar> apply_vector(const Vector2<Scalar>& v) const { return linear() * v; }
  Line2<Scalar> apply(const Line2<Scalar>& l) const {
    return Line2<Scalar>::along(apply(l.anchor()), apply_vector(l.direction()));
  }
  Circle<Scalar> apply(const Circle<Scalar>& c) const { return Circle<Scalar>(apply(c.center), scale_ * c.radius); }
  GeneralParabola<Scalar> apply(const GeneralParabola<Scalar>& par) const {
    return GeneralParabola<Scalar>(apply(par.focus), apply(par.directrix));
  }

  Similarity inverse() const {
    const Scalar s = Scalar(1) / scale_;
    const Vector2<Scalar> t = -(s * Eigen::Rotation2D<Scalar>(-angle_).toRotationMatrix() * translation_);
    return Similarity(-angle_, t, s);
  }

  /// (this o other)(x) = this(other(x)).
  Similarity compose(const Similarity& other) const {
    return Similarity(angle_ + other.angle_, linear() * other.translation_ + translation_, scale_ * other.scale_);
  }

 private:
  Scalar angle_{0};
  Vector2<Scalar> translation_{Vector2<Scalar>::Zero()};
  Scalar scale_{1};
};

using Similarityd = Similarity<double>;

template <typename Scalar>
struct NormalizedScene {
  /// Maps the input scene onto the canonical one.
  Similarity<Scalar> to_canonical;
  Circle<Scalar> circle;
  CanonicalParabola<Scalar> parabola;
};

/// Moves the focus to the origin, turns the axis onto the x-axis and scales
/// the circle to radius 1. The axis orientation is the one closest to the
/// input frame: the directrix-to-focus normal is used when its first nonzero
/// component is positive (then p > 0), its opposite otherwise (then p < 0).
template <typename Scalar>
NormalizedScene<Scalar> normalize_frame(const Circle<Scalar>& circle, const GeneralParabola<Scalar>& parabola) {
  const Scalar dist = parabola.directrix.signed_distance(parabola.focus);
  if (std::abs(dist) <= Scalar(Tolerance::geo)) throw Error(Errc::DegenerateParabola, "focus lies on the directrix");
  // Unit normal pointing from the directrix toward the focus.
  const Vector2<Scalar> toward_focus = (dist > Scalar(0) ? Scalar(1) : Scalar(-1)) * parabola.directrix.normal();
  const bool keep = toward_focus.x() > Scalar(1e-15) ||
                    (std::abs(toward_focus.x()) <= Scalar(1e-15) && toward_focus.y() > Scalar(0));
  const Vector2<Scalar> axis = keep ? toward_focus : Vector2<Scalar>(-toward_focus);
  const Scalar angle = -std::atan2(axis.y(), axis.x());
  const Scalar scale = Scalar(1) / circle.radius;
  const Vector2<Scalar> translation = -(scale * Eigen::Rotation2D<Scalar>(angle).toRotationMatrix() * parabola.focus);
  Similarity<Scalar> sim(angle, translation, scale);
  const Scalar p = (keep ? Scalar(1) : Scalar(-1)) * std::abs(dist) * scale;
  Circle<Scalar> unit(sim.apply(circle.center), Scalar(1));
  return {sim, unit, CanonicalParabola<Scalar>(p)};
}

}  // namespace poncelet
