#pragma once

#include <Eigen/Core>
#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace poncelet {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;

using Point2d = Point2<double>;
using Vector2d = Vector2<double>;

/// Two-tier tolerances shared by every module.
struct Tolerance {
  /// Algebraic identities (polar forms, residual polynomials).
  static constexpr double alg = 1e-9;
  /// Coincidence of constructed points.
  static constexpr double geo = 1e-8;
  /// Vertex distance after an n-step tangent-chord iteration.
  static constexpr double closure = 1e-8;
};

enum class Errc {
  DegenerateParabola,
  IndeterminateEquation,
  PointInsideParabola,
  LineMissesCircle,
  NoClosure,
  VertexInside,
  FormulaSingularity,
  Configuration,
  NotApplicable,
  DegeneratePencil,
  NoChord,
  NoParabola,
  UndefinedPoint,
  Degenerate,
  Validation,
  InconsistentQuad,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

template <typename Scalar>
Scalar cross(const Vector2<Scalar>& u, const Vector2<Scalar>& v) {
  return u.x() * v.y() - u.y() * v.x();
}

template <typename Scalar>
Vector2<Scalar> perp(const Vector2<Scalar>& v) {
  return Vector2<Scalar>(-v.y(), v.x());
}

template <typename Scalar>
bool is_finite(const Point2<Scalar>& p) {
  return std::isfinite(p.x()) && std::isfinite(p.y());
}

/// Implicit line a*x + b*y + c = 0, stored with a^2 + b^2 = 1 and the first
/// nonzero of (a, b) positive. Vertical lines are ordinary values here.
template <typename Scalar>
class Line2 {
 public:
  Line2(Scalar a, Scalar b, Scalar c) {
    const Scalar n = std::hypot(a, b);
    if (!(n > Scalar(0)) || !std::isfinite(n)) {
      throw Error(Errc::Degenerate, "line with zero normal");
    }
    a /= n;
    b /= n;
    c /= n;
    // Canonical sign: first nonzero of (a, b) positive.
    if (a < Scalar(0) || (a == Scalar(0) && b < Scalar(0))) {
      a = -a;
      b = -b;
      c = -c;
    }
    a_ = a;
    b_ = b;
    c_ = c;
  }

  static Line2 through(const Point2<Scalar>& p, const Point2<Scalar>& q) {
    return along(p, q - p);
  }
  static Line2 along(const Point2<Scalar>& p, const Vector2<Scalar>& dir) {
    const Vector2<Scalar> n = perp(dir);
    return Line2(n.x(), n.y(), -n.dot(p));
  }
  static Line2 with_slope(const Point2<Scalar>& p, Scalar slope) {
    return along(p, Vector2<Scalar>(Scalar(1), slope));
  }
  static Line2 vertical(Scalar x) { return Line2(Scalar(1), Scalar(0), -x); }
  static Line2 horizontal(Scalar y) { return Line2(Scalar(0), Scalar(1), -y); }

  Scalar a() const { return a_; }
  Scalar b() const { return b_; }
  Scalar c() const { return c_; }

  Vector2<Scalar> normal() const { return Vector2<Scalar>(a_, b_); }
  Vector2<Scalar> direction() const { return Vector2<Scalar>(-b_, a_); }

  /// Signed distance, positive on the side the normal points to.
  Scalar signed_distance(const Point2<Scalar>& p) const { return a_ * p.x() + b_ * p.y() + c_; }
  Scalar distance(const Point2<Scalar>& p) const { return std::abs(signed_distance(p)); }

  bool is_vertical(Scalar tol = Scalar(Tolerance::geo)) const { return std::abs(b_) <= tol; }

  /// Slope dy/dx, absent for vertical lines.
  std::optional<Scalar> slope(Scalar tol = Scalar(Tolerance::geo)) const {
    if (is_vertical(tol)) return std::nullopt;
    return -a_ / b_;
  }

  Point2<Scalar> project(const Point2<Scalar>& p) const { return p - signed_distance(p) * normal(); }
  Point2<Scalar> reflect(const Point2<Scalar>& p) const {
    return p - Scalar(2) * signed_distance(p) * normal();
  }
  /// Some point on the line.
  Point2<Scalar> anchor() const { return -c_ * normal(); }

  Line2 perpendicular_through(const Point2<Scalar>& p) const { return along(p, normal()); }
  Line2 parallel_through(const Point2<Scalar>& p) const { return along(p, direction()); }

 private:
  Scalar a_{0}, b_{1}, c_{0};
};

using Line2d = Line2<double>;

/// Intersection of two lines; empty when parallel (|sin angle| <= tol).
template <typename Scalar>
std::optional<Point2<Scalar>> intersect(const Line2<Scalar>& l, const Line2<Scalar>& m,
                                        Scalar tol = Scalar(1e-14)) {
  const Scalar det = l.a() * m.b() - l.b() * m.a();
  if (std::abs(det) <= tol) return std::nullopt;
  return Point2<Scalar>((l.b() * m.c() - l.c() * m.b()) / det, (l.c() * m.a() - l.a() * m.c()) / det);
}

template <typename Scalar>
struct Circle {
  Point2<Scalar> center{Point2<Scalar>::Zero()};
  Scalar radius{1};

  Circle() = default;
  Circle(const Point2<Scalar>& c, Scalar r) : center(c), radius(r) {
    if (!(r > Scalar(0)) || !std::isfinite(r)) throw Error(Errc::Validation, "circle radius must be positive");
    if (!is_finite(c)) throw Error(Errc::Validation, "circle center must be finite");
  }

  /// |X - E|^2 - R^2.
  Scalar power(const Point2<Scalar>& p) const { return (p - center).squaredNorm() - radius * radius; }
  Scalar distance(const Point2<Scalar>& p) const { return std::abs((p - center).norm() - radius); }
  bool contains(const Point2<Scalar>& p, Scalar tol = Scalar(Tolerance::geo)) const {
    return distance(p) <= tol * std::max(Scalar(1), radius);
  }
  Point2<Scalar> at(Scalar theta) const {
    return center + radius * Vector2<Scalar>(std::cos(theta), std::sin(theta));
  }
  Line2<Scalar> tangent_at(const Point2<Scalar>& p) const { return Line2<Scalar>::along(p, perp(Vector2<Scalar>(p - center))); }
};

using Circled = Circle<double>;

/// Real intersections of the line through p with direction dir and the circle,
/// ordered by the line parameter. Empty when the line misses.
template <typename Scalar>
std::vector<Point2<Scalar>> intersect(const Circle<Scalar>& circle, const Point2<Scalar>& p,
                                      const Vector2<Scalar>& dir) {
  const Scalar a = dir.squaredNorm();
  const Vector2<Scalar> w = p - circle.center;
  const Scalar b = dir.dot(w);
  const Scalar c = w.squaredNorm() - circle.radius * circle.radius;
  Scalar disc = b * b - a * c;
  const Scalar scale = std::max({b * b, std::abs(a * c), Scalar(1e-300)});
  if (disc < Scalar(0)) {
    if (disc < -Scalar(64) * std::numeric_limits<Scalar>::epsilon() * scale) return {};
    disc = Scalar(0);
  }
  const Scalar root = std::sqrt(disc);
  // Stable pair: the far root avoids cancellation, the near one uses Vieta.
  const Scalar q = -(b + std::copysign(root, b));
  Scalar t1, t2;
  if (q == Scalar(0)) {
    t1 = t2 = Scalar(0);
  } else {
    t1 = q / a;
    t2 = c / q;
  }
  if (t1 > t2) std::swap(t1, t2);
  return {p + t1 * dir, p + t2 * dir};
}

template <typename Scalar>
std::vector<Point2<Scalar>> intersect(const Circle<Scalar>& circle, const Line2<Scalar>& line) {
  return intersect(circle, line.anchor(), line.direction());
}

/// Second intersection of the line through a point of the circle. Exact for
/// points on the circle: the other root of the chord quadratic.
template <typename Scalar>
Point2<Scalar> second_intersection(const Circle<Scalar>& circle, const Point2<Scalar>& on_circle,
                                   const Vector2<Scalar>& dir) {
  const Scalar t = -Scalar(2) * dir.dot(on_circle - circle.center) / dir.squaredNorm();
  return on_circle + t * dir;
}

template <typename Scalar>
std::vector<Point2<Scalar>> intersect(const Circle<Scalar>& c1, const Circle<Scalar>& c2) {
  const Vector2<Scalar> d = c2.center - c1.center;
  const Scalar dist2 = d.squaredNorm();
  if (dist2 == Scalar(0)) return {};
  const Scalar along = (dist2 + c1.radius * c1.radius - c2.radius * c2.radius) / (Scalar(2) * dist2);
  const Point2<Scalar> mid = c1.center + along * d;
  Scalar h2 = c1.radius * c1.radius - along * along * dist2;
  if (h2 < Scalar(0)) {
    if (h2 < -Scalar(1e-14) * c1.radius * c1.radius) return {};
    h2 = Scalar(0);
  }
  const Vector2<Scalar> off = std::sqrt(h2 / dist2) * perp(d);
  return {mid + off, mid - off};
}

/// Circle through three points; empty when collinear.
template <typename Scalar>
std::optional<Circle<Scalar>> circumcircle(const Point2<Scalar>& a, const Point2<Scalar>& b,
                                           const Point2<Scalar>& c) {
  const Vector2<Scalar> ab = b - a, ac = c - a;
  const Scalar d = Scalar(2) * cross(ab, ac);
  const Scalar scale = ab.squaredNorm() * ac.squaredNorm();
  if (std::abs(d) <= Scalar(1e-14) * std::sqrt(scale) || scale == Scalar(0)) return std::nullopt;
  const Vector2<Scalar> off(
      (ac.y() * ab.squaredNorm() - ab.y() * ac.squaredNorm()) / d,
      (ab.x() * ac.squaredNorm() - ac.x() * ab.squaredNorm()) / d);
  return Circle<Scalar>(a + off, off.norm());
}

/// y^2 = 2 p x + p^2: focus at the origin, directrix x = -p, axis the x-axis.
/// Opens toward +x for p > 0 and toward -x for p < 0.
template <typename Scalar>
struct CanonicalParabola {
  Scalar p{1};

  CanonicalParabola() = default;
  explicit CanonicalParabola(Scalar p_) : p(p_) {
    if (!std::isfinite(p_) || p_ == Scalar(0)) throw Error(Errc::DegenerateParabola, "parabola parameter must be nonzero");
  }

  /// S(x, y) = y^2 - 2 p x - p^2. Positive outside (two tangents), negative inside.
  Scalar eval(const Point2<Scalar>& a) const { return a.y() * a.y() - Scalar(2) * p * a.x() - p * p; }
  Point2<Scalar> focus() const { return Point2<Scalar>::Zero(); }
  Line2<Scalar> directrix() const { return Line2<Scalar>::vertical(-p); }
  Point2<Scalar> vertex() const { return Point2<Scalar>(-p / Scalar(2), Scalar(0)); }

  /// Point with ordinate y.
  Point2<Scalar> point_at_y(Scalar y) const { return Point2<Scalar>((y * y - p * p) / (Scalar(2) * p), y); }
  /// Rational parametrization (p/2 (t^2 - 1), p t).
  Point2<Scalar> point(Scalar t) const { return Point2<Scalar>(p / Scalar(2) * (t * t - Scalar(1)), p * t); }
  /// Direction of the tangent at the point with ordinate y (slope p / y).
  Vector2<Scalar> tangent_direction_at_y(Scalar y) const { return Vector2<Scalar>(y, p); }
  Line2<Scalar> tangent_at_y(Scalar y) const { return Line2<Scalar>::along(point_at_y(y), tangent_direction_at_y(y)); }

  /// Signed tangency residual of a line: 2 a c - p for the normalized line.
  /// Zero iff the line touches the parabola (reflection of the focus lies on the directrix).
  Scalar tangency(const Line2<Scalar>& l) const { return Scalar(2) * l.a() * l.c() - p; }
};

using CanonicalParabolad = CanonicalParabola<double>;

/// Parabola given by focus and directrix in an arbitrary frame.
template <typename Scalar>
struct GeneralParabola {
  Point2<Scalar> focus{Point2<Scalar>::Zero()};
  Line2<Scalar> directrix{Line2<Scalar>::vertical(Scalar(-1))};

  GeneralParabola() = default;
  GeneralParabola(const Point2<Scalar>& f, const Line2<Scalar>& l) : focus(f), directrix(l) {
    if (!is_finite(f)) throw Error(Errc::Validation, "focus must be finite");
    if (l.distance(f) <= Scalar(Tolerance::geo)) throw Error(Errc::DegenerateParabola, "focus lies on the directrix");
  }
  static GeneralParabola from(const CanonicalParabola<Scalar>& par) {
    return GeneralParabola(par.focus(), par.directrix());
  }

  Scalar focal_distance() const { return directrix.distance(focus); }
  /// |XF|^2 - dist(X, l)^2: negative inside, positive outside.
  Scalar eval(const Point2<Scalar>& x) const {
    const Scalar d = directrix.signed_distance(x);
    return (x - focus).squaredNorm() - d * d;
  }
  /// Tangency residual of a line: distance of the focus reflection from the directrix.
  Scalar tangency(const Line2<Scalar>& l) const { return directrix.signed_distance(l.reflect(focus)); }
  /// Contact point of a tangent line: the point above the foot of the focus reflection.
  Point2<Scalar> contact(const Line2<Scalar>& tangent) const {
    const Point2<Scalar> foot = directrix.project(tangent.reflect(focus));
    return *intersect(tangent, directrix.perpendicular_through(foot), Scalar(0));
  }
};

using GeneralParabolad = GeneralParabola<double>;

/// Symmetric 3x3 matrix of a x^2 + 2 b x y + c y^2 + 2 d x + 2 e y + f.
template <typename Scalar>
class ConicMatrix {
 public:
  using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

  ConicMatrix() : m_(Matrix3::Zero()) {}
  explicit ConicMatrix(const Matrix3& m) : m_(Scalar(0.5) * (m + m.transpose())) {}

  static ConicMatrix from_coefficients(Scalar a, Scalar b, Scalar c, Scalar d, Scalar e, Scalar f) {
    Matrix3 m;
    m << a, b, d, b, c, e, d, e, f;
    return ConicMatrix(m);
  }
  static ConicMatrix of(const Circle<Scalar>& k) {
    const Point2<Scalar>& e = k.center;
    return from_coefficients(Scalar(1), Scalar(0), Scalar(1), -e.x(), -e.y(),
                             e.squaredNorm() - k.radius * k.radius);
  }
  static ConicMatrix of(const CanonicalParabola<Scalar>& par) {
    return from_coefficients(Scalar(0), Scalar(0), Scalar(1), -par.p, Scalar(0), -par.p * par.p);
  }
  static ConicMatrix of(const GeneralParabola<Scalar>& par) {
    const Line2<Scalar>& l = par.directrix;
    const Point2<Scalar>& f = par.focus;
    return from_coefficients(Scalar(1) - l.a() * l.a(), -l.a() * l.b(), Scalar(1) - l.b() * l.b(),
                             -f.x() - l.a() * l.c(), -f.y() - l.b() * l.c(),
                             f.squaredNorm() - l.c() * l.c());
  }

  const Matrix3& matrix() const { return m_; }
  Scalar operator()(int i, int j) const { return m_(i, j); }

  /// Polar (bilinear) form S_AB.
  Scalar polar(const Point2<Scalar>& a, const Point2<Scalar>& b) const {
    return a.homogeneous().dot(m_ * b.homogeneous());
  }
  Scalar eval(const Point2<Scalar>& a) const { return polar(a, a); }

  ConicMatrix operator+(const ConicMatrix& o) const { return ConicMatrix(m_ + o.m_); }
  ConicMatrix operator-(const ConicMatrix& o) const { return ConicMatrix(m_ - o.m_); }
  ConicMatrix operator*(Scalar s) const { return ConicMatrix(s * m_); }

 private:
  Matrix3 m_;
};

using ConicMatrixd = ConicMatrix<double>;

template <typename Scalar>
Point2<Scalar> midpoint(const Point2<Scalar>& a, const Point2<Scalar>& b) {
  return Scalar(0.5) * (a + b);
}

inline const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DegenerateParabola: return "degenerate-parabola";
    case Errc::IndeterminateEquation: return "indeterminate-equation";
    case Errc::PointInsideParabola: return "point-inside-parabola";
    case Errc::LineMissesCircle: return "line-misses-circle";
    case Errc::NoClosure: return "no-closure";
    case Errc::VertexInside: return "vertex-inside";
    case Errc::FormulaSingularity: return "formula-singularity";
    case Errc::Configuration: return "configuration";
    case Errc::NotApplicable: return "not-applicable";
    case Errc::DegeneratePencil: return "degenerate-pencil";
    case Errc::NoChord: return "no-chord";
    case Errc::NoParabola: return "no-parabola";
    case Errc::UndefinedPoint: return "undefined-point";
    case Errc::Degenerate: return "degenerate";
    case Errc::Validation: return "validation";
    case Errc::InconsistentQuad: return "inconsistent-quad";
  }
  return "unknown";
}

}  // namespace poncelet
