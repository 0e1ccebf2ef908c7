#pragma once

// Brute-force tangent-chord iteration. Nothing here uses a closed-form closure
// condition: only tangents from a point and chord intersections.

#include "poncelet/core.hpp"
#include "poncelet/joachimsthal.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace poncelet {

struct OrbitStep {
  /// Vertex reached at the end of this edge.
  Point2d vertex;
  Line2d tangent;
  Point2d contact;
};

struct ClosureReport {
  int n_target{0};
  /// |V_n - V_0|.
  double residual{0.0};
  std::vector<OrbitStep> steps;
  bool closed{false};
  /// Returned within tolerance but through repeated vertices.
  bool trivial{false};
};

/// One edge from V. With an incoming contact the other tangent is taken;
/// otherwise branch > 0 picks the tangent with the larger contact ordinate.
OrbitStep step(const Point2d& v, const std::optional<Point2d>& incoming_contact, int branch, const Circled& circle,
               const CanonicalParabolad& par);

/// Report after exactly n edges from v0.
ClosureReport iterate(const Point2d& v0, int branch, const Circled& circle, const CanonicalParabolad& par, int n);

struct PeriodReport {
  /// Smallest n >= 3 with a non-trivial closure.
  std::optional<int> period;
  /// Entry k is the report for n = k + 1.
  std::vector<ClosureReport> reports;
};

PeriodReport detect_period(const Point2d& v0, int branch, const Circled& circle, const CanonicalParabolad& par,
                           int n_max);

double closure_residual(const Point2d& v0, int branch, const Circled& circle, const CanonicalParabolad& par, int n);

/// Circle point of largest S among n_samples equally spaced angles, if S > margin there.
std::optional<Point2d> farthest_exterior_start(const Circled& circle, const CanonicalParabolad& par,
                                               int n_samples = 720, double margin = 1e-6);

struct SweepSample {
  double p;
  double residual;
  bool valid;
};

/// n-step residual for each p, starting from the exterior point of largest S.
std::vector<SweepSample> sweep_p(const Circled& circle, const std::vector<double>& ps, int n);

/// Parabolas sharing a focus and an axis direction, one per p.
struct ConfocalFamily {
  Point2d focus;
  Vector2d axis;
};

/// Parabolas sharing a focus whose directrices pass through a pivot.
struct PivotFamily {
  Point2d focus;
  Point2d pivot;
};

using FamilySpec = std::variant<ConfocalFamily, PivotFamily>;

enum class Isoperiodic { Three, Four, Neither };

const char* to_string(Isoperiodic k) noexcept;

struct IsoperiodicResult {
  Isoperiodic kind{Isoperiodic::Neither};
  /// p for confocal members, directrix angle for pivot members.
  std::vector<double> witnesses;
  /// Members closing with the claimed period (or, for Neither, members closing with neither 3 nor 4).
  int verified{0};
  int sampled{0};
  bool oracle_agrees{false};
};

/// Analytic classification, checked by the oracle on `members` family members.
IsoperiodicResult classify_isoperiodic(const Circled& circle, const FamilySpec& family, int members = 10);

}  // namespace poncelet
