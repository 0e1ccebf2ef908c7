#pragma once

#include "poncelet/core.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace poncelet {

template <typename Scalar>
struct Root {
  Scalar value;
  int multiplicity{1};
};

namespace detail {

/// Leading coefficients at or below this fraction of the largest one are zero.
inline constexpr double kDegreeThreshold = 1e-12;

/// Coefficients are highest degree first.
template <typename Scalar>
Scalar horner(std::span<const Scalar> c, Scalar x) {
  Scalar v = 0;
  for (Scalar ci : c) v = v * x + ci;
  return v;
}

template <typename Scalar>
Scalar horner_derivative(std::span<const Scalar> c, Scalar x) {
  const std::size_t n = c.size() - 1;
  Scalar v = 0;
  for (std::size_t i = 0; i < n; ++i) v = v * x + Scalar(n - i) * c[i];
  return v;
}

template <typename Scalar>
Scalar coefficient_scale(std::span<const Scalar> c) {
  Scalar m = 0;
  for (Scalar ci : c) m = std::max(m, std::abs(ci));
  return m;
}

/// Bound used when accepting a root: |poly(r)| <= 1e-10 * max(1, max|c| * max(1, |r|)^deg).
template <typename Scalar>
Scalar residual_bound(std::span<const Scalar> c, Scalar r) {
  const Scalar grow = std::pow(std::max(Scalar(1), std::abs(r)), Scalar(c.size() - 1));
  return Scalar(1e-10) * std::max(Scalar(1), coefficient_scale(c) * grow);
}

/// Drops leading coefficients that are zero relative to the largest one.
/// Throws when every coefficient vanishes.
template <typename Scalar>
std::vector<Scalar> trim_leading(std::span<const Scalar> c) {
  const Scalar scale = coefficient_scale(c);
  if (scale == Scalar(0)) throw Error(Errc::IndeterminateEquation, "all coefficients are zero");
  std::size_t first = 0;
  while (first + 1 < c.size() && std::abs(c[first]) <= Scalar(kDegreeThreshold) * scale) ++first;
  return std::vector<Scalar>(c.begin() + static_cast<std::ptrdiff_t>(first), c.end());
}

template <typename Scalar>
Scalar newton_polish(std::span<const Scalar> c, Scalar x, int iterations = 8) {
  Scalar best = x;
  Scalar best_val = std::abs(horner(c, x));
  for (int i = 0; i < iterations && best_val > Scalar(0); ++i) {
    const Scalar d = horner_derivative(c, x);
    if (d == Scalar(0)) break;
    const Scalar next = x - horner(c, x) / d;
    if (!std::isfinite(next)) break;
    x = next;
    const Scalar v = std::abs(horner(c, x));
    if (v < best_val) {
      best_val = v;
      best = x;
    } else if (v > best_val) {
      break;
    }
  }
  return best;
}

/// Sorts, polishes, filters by residual, and merges clusters into multiple roots.
template <typename Scalar>
std::vector<Root<Scalar>> finalize(std::span<const Scalar> c, std::vector<Scalar> candidates) {
  std::vector<Scalar> kept;
  for (Scalar r : candidates) {
    if (!std::isfinite(r)) continue;
    r = newton_polish(c, r);
    if (std::abs(horner(c, r)) <= residual_bound(c, r)) kept.push_back(r);
  }
  std::sort(kept.begin(), kept.end());
  std::vector<Root<Scalar>> out;
  for (Scalar r : kept) {
    // Near-multiple roots surface as clusters of width ~ sqrt(eps) |r|.
    if (!out.empty() && std::abs(r - out.back().value) <= Scalar(1e-6) * std::max(Scalar(1), std::abs(r))) {
      Root<Scalar>& last = out.back();
      last.value = (last.value * Scalar(last.multiplicity) + r) / Scalar(last.multiplicity + 1);
      ++last.multiplicity;
      continue;
    }
    out.push_back({r, 1});
  }
  return out;
}

template <typename Scalar>
std::vector<Scalar> quadratic_candidates(Scalar a, Scalar b, Scalar c, bool& is_double) {
  is_double = false;
  const Scalar disc = b * b - Scalar(4) * a * c;
  const Scalar scale = std::max(b * b, std::abs(Scalar(4) * a * c));
  if (std::abs(disc) <= Scalar(64) * std::numeric_limits<Scalar>::epsilon() * scale) {
    is_double = true;
    return {-b / (Scalar(2) * a)};
  }
  if (disc < Scalar(0)) return {};
  const Scalar q = Scalar(-0.5) * (b + std::copysign(std::sqrt(disc), b));
  if (q == Scalar(0)) return {Scalar(0), Scalar(0)};
  return {q / a, c / q};
}

}  // namespace detail

/// Real roots of c2 x^2 + c1 x + c0, ascending, double roots flagged.
template <typename Scalar>
std::vector<Root<Scalar>> solve_quadratic(Scalar c2, Scalar c1, Scalar c0) {
  const std::array<Scalar, 3> raw{c2, c1, c0};
  const std::vector<Scalar> c = detail::trim_leading<Scalar>(raw);
  if (c.size() == 1) return {};
  if (c.size() == 2) return {{-c[1] / c[0], 1}};
  bool is_double = false;
  std::vector<Scalar> cand = detail::quadratic_candidates(c[0], c[1], c[2], is_double);
  if (is_double) return {{detail::newton_polish<Scalar>(c, cand.front()), 2}};
  std::sort(cand.begin(), cand.end());
  std::vector<Root<Scalar>> out;
  for (Scalar r : cand) out.push_back({r, 1});
  return out;
}

/// Standard cubic discriminant; zero iff a repeated root.
template <typename Scalar>
Scalar cubic_discriminant(Scalar c3, Scalar c2, Scalar c1, Scalar c0) {
  return Scalar(18) * c3 * c2 * c1 * c0 - Scalar(4) * c2 * c2 * c2 * c0 + c2 * c2 * c1 * c1 -
         Scalar(4) * c3 * c1 * c1 * c1 - Scalar(27) * c3 * c3 * c0 * c0;
}

/// Real roots of a cubic by the trigonometric / Cardano forms with Newton polish.
template <typename Scalar>
std::vector<Root<Scalar>> solve_cubic(Scalar c3, Scalar c2, Scalar c1, Scalar c0) {
  const std::array<Scalar, 4> raw{c3, c2, c1, c0};
  const std::vector<Scalar> c = detail::trim_leading<Scalar>(raw);
  if (c.size() < 4) {
    std::array<Scalar, 3> q{Scalar(0), Scalar(0), Scalar(0)};
    std::copy(c.begin(), c.end(), q.end() - static_cast<std::ptrdiff_t>(c.size()));
    return solve_quadratic(q[0], q[1], q[2]);
  }
  const Scalar a = c[1] / c[0], b = c[2] / c[0], d = c[3] / c[0];
  // Depressed form t^3 + P t + Q with x = t - a/3.
  const Scalar shift = a / Scalar(3);
  const Scalar P = b - a * a / Scalar(3);
  const Scalar Q = Scalar(2) * a * a * a / Scalar(27) - a * b / Scalar(3) + d;
  std::vector<Scalar> cand;
  const Scalar half_q = Q / Scalar(2), third_p = P / Scalar(3);
  const Scalar disc = half_q * half_q + third_p * third_p * third_p;
  if (disc < Scalar(0)) {
    const Scalar r = std::sqrt(-third_p);
    const Scalar phi = std::acos(std::clamp(-half_q / (r * r * r), Scalar(-1), Scalar(1)));
    for (int k = 0; k < 3; ++k) {
      cand.push_back(Scalar(2) * r * std::cos((phi + Scalar(2) * std::numbers::pi_v<Scalar> * k) / Scalar(3)) - shift);
    }
  } else {
    const Scalar s = std::sqrt(disc);
    const Scalar u = std::cbrt(-half_q + s);
    const Scalar v = std::cbrt(-half_q - s);
    cand.push_back(u + v - shift);
    // Repeated pair from the conjugate roots when the discriminant is ~0.
    cand.push_back(-(u + v) / Scalar(2) - shift);
  }
  std::vector<Root<Scalar>> roots = detail::finalize<Scalar>(c, cand);
  // A triple root collapses to one cluster; recover multiplicity from derivatives.
  for (Root<Scalar>& r : roots) {
    const Scalar d1 = std::abs(detail::horner_derivative<Scalar>(c, r.value));
    const Scalar d2 = std::abs(Scalar(6) * c[0] * r.value + Scalar(2) * c[1]);
    const Scalar tol = Scalar(1e-7) * detail::coefficient_scale<Scalar>(c) * std::max(Scalar(1), r.value * r.value);
    if (d1 <= tol) r.multiplicity = d2 <= tol ? 3 : std::max(r.multiplicity, 2);
  }
  return roots;
}

/// All four complex roots of a quartic via companion-matrix eigenvalues.
/// The leading coefficient must be nonzero.
template <typename Scalar>
std::array<std::complex<Scalar>, 4> quartic_complex_roots(Scalar c4, Scalar c3, Scalar c2, Scalar c1, Scalar c0) {
  if (c4 == Scalar(0)) throw Error(Errc::IndeterminateEquation, "quartic leading coefficient is zero");
  Eigen::Matrix<Scalar, 4, 4> companion = Eigen::Matrix<Scalar, 4, 4>::Zero();
  companion(0, 0) = -c3 / c4;
  companion(0, 1) = -c2 / c4;
  companion(0, 2) = -c1 / c4;
  companion(0, 3) = -c0 / c4;
  companion(1, 0) = companion(2, 1) = companion(3, 2) = Scalar(1);
  Eigen::EigenSolver<Eigen::Matrix<Scalar, 4, 4>> solver(companion, false);
  std::array<std::complex<Scalar>, 4> out;
  for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  return out;
}

/// Real roots of a quartic. Every candidate is Newton-polished on the original
/// polynomial and kept only if its residual passes.
template <typename Scalar>
std::vector<Root<Scalar>> solve_quartic(Scalar c4, Scalar c3, Scalar c2, Scalar c1, Scalar c0) {
  const std::array<Scalar, 5> raw{c4, c3, c2, c1, c0};
  const std::vector<Scalar> c = detail::trim_leading<Scalar>(raw);
  if (c.size() < 5) {
    std::array<Scalar, 4> q{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    std::copy(c.begin(), c.end(), q.end() - static_cast<std::ptrdiff_t>(c.size()));
    return solve_cubic(q[0], q[1], q[2], q[3]);
  }
  const auto eig = quartic_complex_roots(c[0], c[1], c[2], c[3], c[4]);
  std::vector<Scalar> cand;
  for (const auto& z : eig) {
    // Double real roots come back as pairs with imaginary parts ~ sqrt(eps).
    if (std::abs(z.imag()) <= Scalar(1e-6) * std::max(Scalar(1), std::abs(z))) cand.push_back(z.real());
  }
  return detail::finalize<Scalar>(c, cand);
}

/// Value of a polynomial given highest degree first.
template <typename Scalar>
Scalar polyval(std::span<const Scalar> c, Scalar x) {
  return detail::horner(c, x);
}

}  // namespace poncelet
