#pragma once

#include "poncelet/poncelet.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace test {

using namespace poncelet;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240917);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline Point2d on_unit(const Point2d& e, double theta) { return e + Vector2d(std::cos(theta), std::sin(theta)); }

/// Random point of the unit circle at e outside the parabola, S above margin.
inline std::optional<Point2d> exterior_point(const Point2d& e, const CanonicalParabolad& par, double margin = 1e-3) {
  for (int k = 0; k < 200; ++k) {
    const Point2d a = on_unit(e, uniform(0.0, 2.0 * std::numbers::pi));
    if (par.eval(a) > margin) return a;
  }
  return std::nullopt;
}

/// Brute-force tangency of a line to y^2 = 2 p x + p^2: substitute the line and
/// return the discriminant of the resulting quadratic, scaled to the line's unit normal.
inline double substitution_discriminant(const Line2d& l, double p) {
  // a x + b y + c = 0
  if (std::abs(l.a()) > 1e-12) {
    // x = -(b y + c) / a  ->  y^2 + (2 p b / a) y + (2 p c / a - p^2) = 0
    const double B = 2.0 * p * l.b() / l.a();
    const double C = 2.0 * p * l.c() / l.a() - p * p;
    return (B * B - 4.0 * C) * l.a() * l.a();
  }
  // horizontal line y = -c / b meets the parabola once
  return 1.0;
}

}  // namespace test
