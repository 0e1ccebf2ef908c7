#include "poncelet/closure_oracle.hpp"

#include "poncelet/frame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace poncelet {

OrbitStep step(const Point2d& v, const std::optional<Point2d>& incoming_contact, int branch, const Circled& circle,
               const CanonicalParabolad& par) {
  // Only rounding decides that V is on the parabola: near-trivial chains have
  // vertices with tiny but meaningful S, whose tangents are still distinct.
  const double rounding = 64.0 * std::numeric_limits<double>::epsilon() *
                          (v.y() * v.y() + std::abs(2.0 * par.p * v.x()) + par.p * par.p);
  const TangentPair pair = tangents_from_point(v, par, rounding);
  const Tangent* pick = branch > 0 ? &pair.tangents.back() : &pair.tangents.front();
  if (incoming_contact && pair.tangents.size() == 2) {
    const double d0 = (pair.tangents[0].contact - *incoming_contact).norm();
    const double d1 = (pair.tangents[1].contact - *incoming_contact).norm();
    pick = d0 > d1 ? &pair.tangents[0] : &pair.tangents[1];
  }
  // V is on the circle, so the chord's other end is the second root of the
  // chord quadratic. This stays accurate for near-tangent chords.
  const Point2d next = second_intersection(circle, v, pick->line.direction());
  return {next, pick->line, pick->contact};
}

ClosureReport iterate(const Point2d& v0, int branch, const Circled& circle, const CanonicalParabolad& par, int n) {
  ClosureReport rep;
  rep.n_target = n;
  Point2d v = v0;
  std::optional<Point2d> incoming;
  for (int k = 0; k < n; ++k) {
    const OrbitStep s = step(v, incoming, branch, circle, par);
    rep.steps.push_back(s);
    v = s.vertex;
    incoming = s.contact;
  }
  rep.residual = (v - v0).norm();
  bool distinct = true;
  std::vector<Point2d> vs{v0};
  for (int k = 0; k + 1 < n; ++k) vs.push_back(rep.steps[static_cast<std::size_t>(k)].vertex);
  for (std::size_t i = 0; i < vs.size() && distinct; ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if ((vs[i] - vs[j]).norm() <= Tolerance::geo) {
        distinct = false;
        break;
      }
  const bool back = rep.residual <= Tolerance::closure;
  rep.closed = back && distinct && n >= 3;
  rep.trivial = back && !rep.closed;
  return rep;
}

PeriodReport detect_period(const Point2d& v0, int branch, const Circled& circle, const CanonicalParabolad& par,
                           int n_max) {
  PeriodReport out;
  for (int n = 1; n <= n_max; ++n) {
    out.reports.push_back(iterate(v0, branch, circle, par, n));
    if (!out.period && out.reports.back().closed) out.period = n;
  }
  return out;
}

double closure_residual(const Point2d& v0, int branch, const Circled& circle, const CanonicalParabolad& par, int n) {
  return iterate(v0, branch, circle, par, n).residual;
}

std::optional<Point2d> farthest_exterior_start(const Circled& circle, const CanonicalParabolad& par, int n_samples,
                                               double margin) {
  std::optional<Point2d> best;
  double best_s = margin;
  for (int k = 0; k < n_samples; ++k) {
    const Point2d q = circle.at(2.0 * std::numbers::pi * k / n_samples);
    const double s = eval_S(q, par);
    if (s > best_s) {
      best_s = s;
      best = q;
    }
  }
  return best;
}

std::vector<SweepSample> sweep_p(const Circled& circle, const std::vector<double>& ps, int n) {
  std::vector<SweepSample> out;
  out.reserve(ps.size());
  for (double p : ps) {
    SweepSample s{p, 0.0, false};
    if (p != 0.0) {
      const CanonicalParabolad par(p);
      if (const auto v0 = farthest_exterior_start(circle, par)) {
        try {
          s.residual = closure_residual(*v0, 1, circle, par, n);
          s.valid = true;
        } catch (const Error&) {
        }
      }
    }
    out.push_back(s);
  }
  return out;
}

const char* to_string(Isoperiodic k) noexcept {
  switch (k) {
    case Isoperiodic::Three: return "3-isoperiodic";
    case Isoperiodic::Four: return "4-isoperiodic";
    case Isoperiodic::Neither: return "neither";
  }
  return "unknown";
}

namespace {

struct Member {
  double parameter;
  GeneralParabolad parabola;
};

/// Members in a deterministic order; callers stop after enough admissible ones.
std::vector<Member> family_members(const Circled& circle, const FamilySpec& family) {
  std::vector<Member> out;
  const double r = circle.radius;
  if (const auto* cf = std::get_if<ConfocalFamily>(&family)) {
    const Vector2d axis = cf->axis.normalized();
    for (int k = 1; k <= 20; ++k) {
      for (double sign : {1.0, -1.0}) {
        const double p = sign * r * 0.095 * k;
        out.push_back({p, GeneralParabolad(cf->focus, Line2d::along(cf->focus - p * axis, perp(axis)))});
      }
    }
  } else {
    const auto& pf = std::get<PivotFamily>(family);
    for (int k = 0; k < 40; ++k) {
      const double phi = std::numbers::pi * (k + 0.37) / 40.0;
      const Line2d l = Line2d::along(pf.pivot, Vector2d(std::cos(phi), std::sin(phi)));
      if (l.distance(pf.focus) <= 1e-3 * r) continue;
      out.push_back({phi, GeneralParabolad(pf.focus, l)});
    }
  }
  return out;
}

std::optional<int> member_period(const Circled& circle, const GeneralParabolad& par) {
  const NormalizedScene<double> scene = normalize_frame(circle, par);
  const auto v0 = farthest_exterior_start(scene.circle, scene.parabola, 720, 1e-3);
  if (!v0) return std::nullopt;
  for (int n : {3, 4}) {
    if (iterate(*v0, 1, scene.circle, scene.parabola, n).closed) return n;
  }
  return 0;
}

}  // namespace

IsoperiodicResult classify_isoperiodic(const Circled& circle, const FamilySpec& family, int members) {
  const Point2d focus = std::visit([](const auto& f) { return f.focus; }, family);
  const double r = circle.radius;
  const double d = (circle.center - focus).norm();
  IsoperiodicResult res;
  if (std::abs(d - r) <= Tolerance::geo * r) {
    res.kind = Isoperiodic::Three;
  } else if (d <= Tolerance::geo * r) {
    res.kind = Isoperiodic::Four;
  } else if (const auto* pf = std::get_if<PivotFamily>(&family)) {
    // Pole of the focal polar: L = F + (E - F)(|EF|^2 - R^2) / |EF|^2.
    const Point2d l = focus + (circle.center - focus) * (d * d - r * r) / (d * d);
    if ((pf->pivot - l).norm() <= Tolerance::geo * std::max(1.0, r)) res.kind = Isoperiodic::Four;
  }

  const int want = res.kind == Isoperiodic::Three ? 3 : res.kind == Isoperiodic::Four ? 4 : 0;
  for (const Member& m : family_members(circle, family)) {
    if (res.sampled >= members) break;
    std::optional<int> period;
    try {
      period = member_period(circle, m.parabola);
    } catch (const Error&) {
      continue;
    }
    if (!period) continue;  // no exterior start: not an admissible member
    ++res.sampled;
    res.witnesses.push_back(m.parameter);
    if (*period == want) ++res.verified;
  }
  res.oracle_agrees = res.sampled == members && res.verified == members;
  return res;
}

}  // namespace poncelet
