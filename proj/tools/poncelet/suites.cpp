#include "suites.hpp"

#include "registry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace poncelet::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

class Tally {
 public:
  Tally(std::string id, std::string result, double tol) : id_(std::move(id)), result_(std::move(result)), tol_(tol) {}

  void add(double r) {
    ++n_;
    if (std::isfinite(r)) max_ = std::max(max_, r);
    else finite_ = false;
  }
  void fail() { add(kInf); }
  void note(std::string s) { note_ = std::move(s); }
  int samples() const { return n_; }

  CheckRecord done(const SuiteOptions& o) const {
    CheckRecord r{id_, result_, n_, finite_ ? max_ : kInf, o.tol.value_or(tol_), false, note_};
    r.pass = n_ > 0 && finite_ && max_ <= r.tolerance;
    if (n_ == 0 && r.note.empty()) r.note = "no admissible samples";
    return r;
  }

 private:
  std::string id_;
  std::string result_;
  double tol_;
  int n_{0};
  double max_{0.0};
  bool finite_{true};
  std::string note_;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : g_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g_); }

  /// Circle points with S > min_s and |f| > min_f; fewer than n when the exterior arc is too short.
  std::vector<Point2d> starts(const Circled& c, const CanonicalParabolad& par, int n, double min_s, double min_f = 0.0) {
    std::vector<Point2d> out;
    for (int k = 0; k < 200 * n && static_cast<int>(out.size()) < n; ++k) {
      const Point2d a = c.at(uniform(0.0, 2.0 * kPi));
      if (eval_S(a, par) <= min_s) continue;
      if (min_f > 0.0 && std::abs(common_tangency_residual(a, c, par)) <= min_f) continue;
      out.push_back(a);
    }
    return out;
  }

 private:
  std::mt19937_64 g_;
};

std::string fmt(const char* f, double v) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double relative(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

double pedal_scaled(const Point2d& m, const Point2d& e, double p) {
  const double s = 1.0 + m.norm() + e.norm() + std::abs(p);
  return std::abs(pedal_curve_residual(m, e, p)) / (s * s * s);
}

double vertex_set_distance(std::span<const Point2d> a, std::span<const Point2d> b) {
  double worst = 0.0;
  for (const Point2d& x : a) {
    double best = kInf;
    for (const Point2d& y : b) best = std::min(best, (x - y).norm());
    worst = std::max(worst, best);
  }
  return worst;
}

void require_exterior(const Circled& c, const CanonicalParabolad& par) {
  if (!farthest_exterior_start(c, par, 720, 1e-9))
    throw Error(Errc::Configuration, "the circle has no point outside the parabola");
}

// ---------------------------------------------------------------- shared checks

CheckRecord polar_tangency(Sampler& g, const CanonicalParabolad& par, const SuiteOptions& o) {
  Tally t("joachimsthal.polar-tangency", "polar-tangency", Tolerance::alg);
  for (int k = 0; k < 50 * o.samples && t.samples() < o.samples; ++k) {
    const Point2d a(g.uniform(-4, 4), g.uniform(-4, 4));
    if (eval_S(a, par) <= 1e-6) continue;
    for (const Tangent& tg : tangents_from_point(a, par).tangents) {
      const Point2d b = a + g.uniform(0.5, 3.0) * tg.line.direction();
      const PolarForms f = polar_forms(a, b, par);
      t.add(std::abs(f.tangency_residual()) / std::max({1.0, std::abs(f.s_aa * f.s_bb), f.s_ab * f.s_ab}));
    }
  }
  return t.done(o);
}

CheckRecord tangent_count(Sampler& g, const CanonicalParabolad& par, const SuiteOptions& o) {
  Tally t("joachimsthal.tangent-count", "tangents-from-point", 0.0);
  auto count = [&](const Point2d& a) -> std::size_t {
    try {
      return tangents_from_point(a, par).tangents.size();
    } catch (const Error&) {
      return 0;
    }
  };
  for (int k = 0; k < o.samples; ++k) {
    const Point2d a(g.uniform(-4, 4), g.uniform(-4, 4));
    const double s = eval_S(a, par);
    if (std::abs(s) > 1e-6) t.add(count(a) == (s > 0 ? 2u : 0u) ? 0.0 : 1.0);
    const Point2d on = k == 0 ? par.vertex() : par.point_at_y(g.uniform(-4, 4));
    t.add(count(on) == 1 ? 0.0 : 1.0);
  }
  t.note("residual counts wrong tangent numbers");
  return t.done(o);
}

std::vector<CheckRecord> compass_checks(Sampler& g, const CanonicalParabolad& par, const SuiteOptions& o) {
  Tally agree("compass.agreement", "compass-tangents", Tolerance::alg);
  Tally count("compass.solution-count", "compass-tangents", 0.0);
  const Point2d f = par.focus();
  const Line2d l = par.directrix();
  for (int k = 0; k < 50 * o.samples && agree.samples() < o.samples; ++k) {
    const Point2d a(g.uniform(-4, 4), g.uniform(-4, 4));
    const double s = eval_S(a, par);
    const std::size_t expect = s > 1e-6 ? 2 : s < -1e-6 ? 0 : 99;
    if (expect == 99) continue;
    const auto ct = compass_tangents(f, l, a);
    count.add(ct.size() == expect ? 0.0 : 1.0);
    if (expect == 0 || ct.size() != 2) continue;
    const TangentPair jt = tangents_from_point(a, par);
    double worst = 0.0;
    for (const CompassTangent& c : ct) {
      double best = kInf;
      for (const Tangent& u : jt.tangents)
        best = std::min(best, (c.contact - u.contact).norm() / std::max(1.0, u.contact.norm()));
      worst = std::max(worst, best);
    }
    agree.add(worst);
    count.add(compass_tangents(f, l, par.point_at_y(g.uniform(-4, 4))).size() == 1 ? 0.0 : 1.0);
  }
  count.note("residual counts wrong solution numbers");
  return {agree.done(o), count.done(o)};
}

// ---------------------------------------------------------------- triangle

std::vector<CheckRecord> orthocenter_extremes(const Circled& c, const CanonicalParabolad& par, const SuiteOptions& o) {
  Tally ends("triangle.orthocenter-extremes", "orthocenter-extremes", 1e-6);
  Tally third("triangle.centroid-segment", "orthocenter-extremes", 1e-8);
  OrthocenterRange r;
  try {
    r = orthocenter_range(c, par);
  } catch (const Error& e) {
    ends.note(e.what());
    third.note(e.what());
    return {ends.done(o), third.done(o)};
  }
  auto oy = [&](double th) {
    const Point2d a = c.at(th);
    if (eval_S(a, par) < 0.0) return std::nan("");
    const PonceletTriangle t = build_triangle(a, c, par);
    return (t.vertices[0] + t.vertices[1] + t.vertices[2] - 2.0 * c.center).y();
  };
  const int m = 2000;
  const double h = r.arc.length() / m;
  int imin = 1, imax = 1;
  double vmin = kInf, vmax = -kInf;
  for (int k = 1; k < m; ++k) {
    const double v = oy(r.arc.theta0 + k * h);
    if (std::isnan(v)) continue;
    if (v < vmin) vmin = v, imin = k;
    if (v > vmax) vmax = v, imax = k;
  }
  auto golden = [&](int k, double sign) {
    double lo = r.arc.theta0 + std::max(k - 1, 1) * h, hi = r.arc.theta0 + std::min(k + 1, m - 1) * h;
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int it = 0; it < 100; ++it) {
      const double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
      if (sign * oy(x1) < sign * oy(x2)) hi = x2;
      else lo = x1;
    }
    return oy(0.5 * (lo + hi));
  };
  vmin = std::min(vmin, golden(imin, 1.0));
  vmax = std::max(vmax, golden(imax, -1.0));
  ends.add(std::max(std::abs(vmin - r.o_min.y()), std::abs(vmax - r.o_max.y())));
  auto centroid_at = [&](const Point2d& x) {
    const PonceletTriangle t = build_triangle(x, c, par);
    return Point2d((t.vertices[0] + t.vertices[1] + t.vertices[2]) / 3.0);
  };
  third.add(std::abs((centroid_at(r.x) - centroid_at(r.x_prime)).norm() - (r.o_max - r.o_min).norm() / 3.0));
  return {ends.done(o), third.done(o)};
}

VerificationReport triangle_suite(const Scene& s, const SuiteOptions& o) {
  const NormalizedScene<double> w = canonical(s);
  const Circled& c = w.circle;
  const CanonicalParabolad& par = w.parabola;
  const Point2d e = c.center;
  const double p = par.p;
  require_exterior(c, par);
  Sampler g(o.seed);
  VerificationReport rep{"triangle", {}};
  const bool through = std::abs(q_of(e)) <= Tolerance::alg;

  rep.checks.push_back(polar_tangency(g, par, o));
  rep.checks.push_back(tangent_count(g, par, o));

  {
    Tally t("joachimsthal.second-intersection", "tangent-chord-second-point", Tolerance::geo);
    for (const Point2d& a : g.starts(c, par, o.samples, 1e-3)) {
      for (const Tangent& tg : tangents_from_point(a, par).tangents) {
        if (!tg.slope) continue;
        t.add(std::abs(second_intersection_x(a, *tg.slope, e) - second_intersection(c, a, tg.line.direction()).x()));
      }
    }
    rep.checks.push_back(t.done(o));
  }

  if (through) {
    Tally t("triangle.closure", "triangle-closure", Tolerance::closure);
    for (const Point2d& a : g.starts(c, par, o.samples, 1e-6)) {
      const PeriodReport r = detect_period(a, 1, c, par, 8);
      t.add(r.period && *r.period == 3 ? r.reports[2].residual : kInf);
    }
    t.note("oracle period 3 from every start");
    rep.checks.push_back(t.done(o));
  } else {
    Tally t("triangle.no-closure", "triangle-closure", 0.0);
    double least = kInf;
    for (const Point2d& a : g.starts(c, par, o.samples, 0.05, 0.05)) {
      const double r = iterate(a, 1, c, par, 3).residual;
      least = std::min(least, r);
      t.add(r <= 1e-4 ? 1.0 : 0.0);
    }
    t.note(fmt("circle misses the focus; smallest 3-step residual %.3e", least));
    rep.checks.push_back(t.done(o));
  }

  {
    Tally t("triangle.closure-defect", "closure-defect-identity", Tolerance::alg);
    for (const Point2d& a : g.starts(c, par, o.samples, 0.0)) {
      const ClosureDefect d = closure_defect(a, c, par);
      t.add(relative(d.lhs, d.rhs));
    }
    rep.checks.push_back(t.done(o));
  }

  if (!through) return rep;

  {
    Tally ortho("triangle.orthocenter", "orthocenter-on-directrix", Tolerance::alg);
    Tally euler("triangle.euler-abscissae", "euler-abscissae", Tolerance::alg);
    Tally ped("triangle.pedal", "pedal-curve", 1e-8);
    const int n = std::max(o.samples, 360);
    for (int k = 0; k < n; ++k) {
      const Point2d a = c.at(2.0 * kPi * k / n);
      if (eval_S(a, par) <= 0.0) continue;
      const PonceletTriangle t = build_triangle(a, c, par);
      const auto& v = t.vertices;
      const Point2d sum = v[0] + v[1] + v[2];
      const Point2d h = sum - 2.0 * e;
      ortho.add(std::abs(h.x() + p));
      euler.add(std::max(std::abs(sum.x() / 3.0 - (2.0 * e.x() - p) / 3.0), std::abs(midpoint(h, e).x() - (e.x() - p) / 2.0)));
      for (int i = 0; i < 3; ++i) ped.add(pedal_scaled(midpoint(v[i], v[(i + 1) % 3]), e, p));
    }
    rep.checks.push_back(ortho.done(o));
    rep.checks.push_back(euler.done(o));
    rep.checks.push_back(ped.done(o));
  }

  for (CheckRecord& r : orthocenter_extremes(c, par, o)) rep.checks.push_back(std::move(r));

  {
    Tally t("triangle.from-orthocenter", "orthocenter-first-construction", Tolerance::geo);
    for (const Point2d& a : g.starts(c, par, o.samples, 0.05, 0.05)) {
      const PonceletTriangle tri = build_triangle(a, c, par);
      const Point2d h = centers(a, c, par).orthocenter;
      try {
        const TriangleWithCircle back = triangle_from_orthocenter(h, tri.contacts[1].y(), tri.contacts[0].y(), par);
        t.add(std::max({vertex_set_distance(back.triangle.vertices, tri.vertices), (back.circumcircle.center - e).norm(),
                        std::abs(back.circumcircle.radius - 1.0)}));
      } catch (const Error&) {
        t.fail();
      }
    }
    rep.checks.push_back(t.done(o));
  }

  {
    Tally t("triangle.correspondence", "common-tangent-correspondence", 1e-8);
    const std::vector<Point2d> ys = circle_parabola_intersections(c, par);
    for (const Point2d& y : ys) {
      try {
        const Point2d x = correspondence_partner(y, c, par);
        const Point2d back = correspondence_partner(x, c, par);
        t.add(std::max({c.distance(x), std::abs(common_tangency_residual(x, c, par)),
                        vertex_set_distance(std::span<const Point2d>(&back, 1), ys)}));
      } catch (const Error&) {
        // Tangential crossing: no partner.
      }
    }
    if (ys.empty()) t.note("circle does not cross the parabola");
    rep.checks.push_back(t.done(o));
  }
  return rep;
}

// ---------------------------------------------------------------- common tangents

VerificationReport common_tangent_suite(const Scene& s, const SuiteOptions& o) {
  const NormalizedScene<double> w = canonical(s);
  const Circled& c = w.circle;
  const CanonicalParabolad& par = w.parabola;
  const Point2d e = c.center;
  const double p = par.p;
  Sampler g(o.seed);
  VerificationReport rep{"common-tangents", {}};
  const CommonTangentSet set = common_tangent_points(c, par);

  {
    Tally t("tangents.points", "common-tangent-locus", 1e-8);
    for (const Point2d& x : set.points)
      t.add(std::max({c.distance(x), std::abs(common_tangency_residual(x, c, par)), std::abs(par.tangency(c.tangent_at(x)))}));
    // Brute force: sign changes of f around the circle cannot exceed the points found.
    int changes = 0;
    const int n = 20000;
    double prev = common_tangency_residual(c.at(0.0), c, par);
    for (int k = 1; k <= n; ++k) {
      const double cur = common_tangency_residual(c.at(2.0 * kPi * k / n), c, par);
      if ((cur > 0) != (prev > 0)) ++changes;
      prev = cur;
    }
    t.add(changes <= static_cast<int>(set.points.size()) ? 0.0 : kInf);
    t.note(std::to_string(set.points.size()) + " points, " + std::to_string(changes) + " sign changes of f");
    rep.checks.push_back(t.done(o));
  }

  if (e.norm() > Tolerance::geo) {
    Tally t("tangents.quartic", "common-tangent-quartic", 1e-8);
    const auto k = common_tangent_quartic(e, p);
    const double scale = std::abs(k[0]) + std::abs(k[1]) + std::abs(k[2]) + std::abs(k[3]) + std::abs(k[4]);
    for (const Point2d& x : set.points) t.add(std::abs(polyval(std::span<const double>(k), x.x())) / scale);
    const auto z = quartic_complex_roots(k[0], k[1], k[2], k[3], k[4]);
    const double vieta = 2.0 * e.x() * (2.0 * e.squaredNorm() - 1.0) / e.squaredNorm();
    t.add(std::abs((z[0] + z[1] + z[2] + z[3]).real() - vieta));
    rep.checks.push_back(t.done(o));
  } else {
    Tally t("tangents.centered", "centered-common-tangents", 1e-12);
    if (std::abs(p) <= 2.0) {
      const double h = std::sqrt(4.0 - p * p) / 2.0;
      const std::vector<Point2d> expect{{-p / 2, -h}, {-p / 2, h}};
      t.add(set.points.empty() ? kInf : std::max(vertex_set_distance(set.points, expect), vertex_set_distance(expect, set.points)));
    } else {
      t.add(set.points.empty() ? 0.0 : kInf);
      t.note("|p| > 2R: no common tangents");
    }
    rep.checks.push_back(t.done(o));
  }

  {
    Tally t("tangents.pencil-discriminant", "pencil-discriminant", 1e-8);
    std::vector<Point2d> es;
    if (std::abs(q_of(e)) <= Tolerance::alg) es.push_back(e);
    while (static_cast<int>(es.size()) < o.samples) {
      const double th = g.uniform(0.0, 2.0 * kPi);
      es.emplace_back(std::cos(th), std::sin(th));
    }
    for (const Point2d& x : es) {
      const ConicMatrixd d = circle_through_focus(x);
      const ConicMatrixd m = ConicMatrixd::of(CanonicalParabolad(p));
      const ConicMatrixd h = h_conic(x, p).matrix;
      t.add(relative(pencil_discriminant(d, m), p * p * pencil_discriminant(d, h)));
      if (count_real_degenerate(d, m) != count_real_degenerate(d, h)) t.fail();
    }
    t.note("scene p, circles through the focus");
    rep.checks.push_back(t.done(o));
  }

  {
    Tally t("tangents.focal-kite", "focal-kite", 0.0);
    for (int k = 0; k < 50 * o.samples && t.samples() < o.samples; ++k) {
      const bool first = k == 0;
      const double th = g.uniform(0.0, 2.0 * kPi);
      const Point2d x = first ? e : k % 2 ? Point2d(std::cos(th), std::sin(th)) : Point2d(g.uniform(-2, 2), g.uniform(-2, 2));
      const Circled cc(x, 1.0);
      for (const Point2d& a : circle_parabola_intersections(cc, par)) {
        try {
          const FocalKiteTest ft = focal_kite_test(a, cc, par);
          t.add((std::abs(ft.residual) <= 1e-8) == (ft.parallel_defect <= 1e-8) ? 0.0 : 1.0);
        } catch (const Error&) {
        }
      }
    }
    t.note("residual counts iff violations");
    rep.checks.push_back(t.done(o));
  }
  return rep;
}

// ---------------------------------------------------------------- quadrilaterals

VerificationReport quad_ef_suite(const Scene& s, const SuiteOptions& o) {
  const NormalizedScene<double> w = canonical(s);
  const Circled& c = w.circle;
  const CanonicalParabolad& par = w.parabola;
  const double p = par.p;
  if (c.center.norm() > Tolerance::geo)
    throw Error(Errc::Configuration, "quad-ef needs the circle centered at the focus (E = F)");
  if (std::abs(p) >= 2.0)
    throw Error(Errc::Configuration, "|p| >= 2R: the circle does not reach outside the parabola, no quadrilateral exists");
  Sampler g(o.seed);
  VerificationReport rep{"quad-ef", {}};

  const std::vector<Point2d> starts = g.starts(c, par, o.samples, 1e-3);
  {
    Tally t("butterfly.closure", "butterfly-closure", Tolerance::closure);
    for (const Point2d& a : starts) {
      const ClosureReport r = iterate(a, 1, c, par, 4);
      t.add(r.closed ? r.residual : kInf);
    }
    rep.checks.push_back(t.done(o));
  }
  {
    Tally t("butterfly.chord-criterion", "butterfly-chord-criterion", Tolerance::alg);
    for (const Point2d& a : starts) {
      for (const Tangent& tg : tangents_from_point(a, par).tangents)
        t.add(std::abs(a.x() + second_intersection(c, a, tg.line.direction()).x() + p));
      const double xb = butterfly_partner_x(a.x(), p);
      if (std::abs(xb) >= 1.0 - 1e-6) continue;
      const double yb = std::sqrt(1.0 - xb * xb);
      for (const Point2d& b : {Point2d(xb, yb), Point2d(xb, -yb)})
        if ((a - b).norm() > 1e-6) t.add(std::abs(par.tangency(Line2d::through(a, b))));
    }
    rep.checks.push_back(t.done(o));
  }
  {
    Tally anti("butterfly.antiparallelogram", "antiparallelogram", Tolerance::geo);
    Tally inv("butterfly.inversion", "side-intersection-inversion", Tolerance::geo);
    Tally mid("butterfly.midline", "butterfly-midline", Tolerance::alg);
    Tally trap("trapezoid.round-trip", "trapezoid-parabola", 1e-8);
    for (const Point2d& a : starts) {
      if (std::abs(p + 2.0 * a.x()) < 0.05) continue;  // B near A: sides nearly parallel to the axis
      const PonceletQuad q = build_butterfly(a, c, par);
      const auto& [va, vb, vc, vd] = q.vertices;
      anti.add(std::max({std::abs((va - vb).norm() - (vc - vd).norm()), std::abs((vb - vc).norm() - (va - vd).norm()),
                         std::abs(va.x() - vc.x()), std::abs(vb.x() - vd.x())}));
      const QuadDerivedPoints dp = quad_derived_points(q);
      inv.add(dp.i && dp.j ? std::abs(dp.i->x() * dp.j->x() - 1.0) : kInf);
      for (int k = 0; k < 4; ++k) mid.add(std::abs(midpoint(q.vertices[k], q.vertices[(k + 1) % 4]).x() + p / 2.0));
      try {
        const auto [got, circ] = inscribe_parabola_in_trapezoid(va, vb, vd, vc);
        const auto hit = intersect(got.directrix, Line2d::horizontal(0.0));
        trap.add(hit ? std::max(std::abs(-hit->x() - p), got.focus.norm()) : kInf);
      } catch (const Error&) {
        trap.fail();
      }
    }
    rep.checks.push_back(anti.done(o));
    rep.checks.push_back(inv.done(o));
    rep.checks.push_back(mid.done(o));
    rep.checks.push_back(trap.done(o));
  }
  for (CheckRecord& r : compass_checks(g, par, o)) rep.checks.push_back(std::move(r));
  {
    Tally t("diagonal-quad.prescribed", "prescribed-diagonal-point", Tolerance::geo);
    for (int k = 0; k < 50 * o.samples && t.samples() < o.samples; ++k) {
      const double th = g.uniform(0.0, 2.0 * kPi);
      const double r = k % 2 ? g.uniform(1.3, 3.0) : g.uniform(0.1, 0.8);
      const Point2d et = r * Point2d(std::cos(th), std::sin(th));
      DiagonalQuad dq;
      try {
        dq = quad_with_given_diagonal_point(c, et, c.at(g.uniform(0.0, 2.0 * kPi)));
      } catch (const Error&) {
        continue;
      }
      const QuadDerivedPoints dp = quad_derived_points(dq.quad);
      const auto& hit = r < 1.0 ? dp.j : dp.i;
      double worst = hit ? (*hit - et).norm() : kInf;
      for (int i = 0; i < 4; ++i)
        worst = std::max(worst, std::abs(dq.parabola.tangency(Line2d::through(dq.quad.vertices[i], dq.quad.vertices[(i + 1) % 4]))));
      t.add(worst);
    }
    rep.checks.push_back(t.done(o));
  }
  return rep;
}

VerificationReport quad_general_suite(const Scene& s, const SuiteOptions& o) {
  const NormalizedScene<double> w = canonical(s);
  const Circled& c = w.circle;
  const CanonicalParabolad& par = w.parabola;
  const Point2d e = c.center;
  const double p = par.p;
  if (e.norm() <= Tolerance::geo) throw Error(Errc::Configuration, "quad-general needs E != F; use the quad-ef suite");
  if (std::abs(q_of(e)) <= Tolerance::alg)
    throw Error(Errc::Configuration, "the circle passes through the focus: L coincides with F and no quadrilateral closes");
  require_exterior(c, par);
  const DiagonalPoint lp = l_point(e);
  Sampler g(o.seed);
  VerificationReport rep{"quad-general", {}};

  const std::vector<Point2d> starts = g.starts(c, par, o.samples, 1e-3);
  {
    Tally t("quad.closure", "unique-closing-directrix", Tolerance::closure);
    for (const Point2d& a : starts) {
      const ClosureReport r = iterate(a, 1, c, par, 4);
      t.add(r.closed ? r.residual : kInf);
    }
    if (std::abs(p - lp.p) > Tolerance::geo) t.note(fmt("directrix misses L: the closing p is %.17g", lp.p));
    rep.checks.push_back(t.done(o));
  }
  {
    Tally t("quad.uniqueness", "unique-closing-directrix", 1e-3 + 1e-12);
    std::vector<double> ps;
    for (int k = -500; k <= 500; ++k) ps.push_back(lp.p + 1e-3 * k);
    const std::vector<SweepSample> sw = sweep_p(c, ps, 4);
    std::vector<double> minima;
    for (std::size_t k = 0; k < sw.size(); ++k) {
      if (!sw[k].valid || sw[k].residual >= 1e-6) continue;
      const bool left = k == 0 || !sw[k - 1].valid || sw[k - 1].residual >= sw[k].residual;
      const bool right = k + 1 == sw.size() || !sw[k + 1].valid || sw[k + 1].residual > sw[k].residual;
      if (left && right) minima.push_back(sw[k].p);
    }
    t.add(minima.size() == 1 ? std::abs(minima[0] - lp.p) : kInf);
    t.note(std::to_string(minima.size()) + " residual minima below 1e-6 for p within 0.5 of -x_L");
    rep.checks.push_back(t.done(o));
  }

  Tally diag("quad.diagonal-point", "diagonal-point", Tolerance::geo);
  Tally anti("quad.anticenter", "quad-anticenter", Tolerance::geo);
  Tally sum("quad.vertex-sum", "quad-vertex-sum", Tolerance::geo);
  Tally nine("quad.nine-point", "quad-nine-point", 1e-7);
  Tally ped("quad.pedal", "pedal-curve", 1e-8);
  Tally ins("quad.inscribe", "inscribed-parabola", 1e-7);
  const double target = 2.0 * (e.x() - p);
  {
    const auto k = common_tangent_quartic(e, p);
    const auto z = quartic_complex_roots(k[0], k[1], k[2], k[3], k[4]);
    sum.add(std::abs((z[0] + z[1] + z[2] + z[3]).real() - 2.0 * (e.x() - lp.p)));
  }
  const Line2d directrix = par.directrix();
  for (const Point2d& a : starts) {
    PonceletQuad q;
    try {
      q = build_quad_through_L(a, c, par);
    } catch (const Error&) {
      diag.fail();
      continue;
    }
    diag.add(q.diagonal_point ? (*q.diagonal_point - lp.l).norm() : kInf);
    const QuadDerivedPoints dp = quad_derived_points(q);
    anti.add(std::max(std::abs(dp.anticenter.x() + p), dp.maltitude_spread));
    double sx = 0.0;
    for (const Point2d& v : q.vertices) sx += v.x();
    sum.add(std::abs(sx - target));
    if (dp.i && dp.j) {
      const Circled np = nine_point_circle({*dp.i, *dp.j, lp.l});
      nine.add(std::max(np.distance(Point2d(0, 0)), np.distance(dp.centroid)));
    }
    for (int k = 0; k < 4; ++k) ped.add(pedal_scaled(midpoint(q.vertices[k], q.vertices[(k + 1) % 4]), e, p));
    try {
      const GeneralParabolad got = inscribe_parabola_in_cyclic_quad(q.vertices[0], q.vertices[1], q.vertices[2], q.vertices[3]);
      const double dl = (Eigen::Vector3d(got.directrix.a(), got.directrix.b(), got.directrix.c()) -
                         Eigen::Vector3d(directrix.a(), directrix.b(), directrix.c())).norm();
      ins.add(std::max(got.focus.norm(), dl));
    } catch (const Error&) {
      ins.fail();
    }
  }
  for (const Tally* t : {&diag, &anti, &sum, &nine, &ped, &ins}) rep.checks.push_back(t->done(o));
  return rep;
}

// ---------------------------------------------------------------- isoperiodic

VerificationReport isoperiodic_suite(const Scene& s, const SuiteOptions& o) {
  const GeneralParabolad par = s.parabola ? *s.parabola : parabola_from_p(1.0);
  const Circled& c = s.circle;
  const Point2d f = par.focus;
  const Vector2d axis = (f - par.directrix.project(f)).normalized();
  const double d = (c.center - f).norm();
  const double r = c.radius;
  VerificationReport rep{"isoperiodic", {}};

  auto record = [&](const char* id, const IsoperiodicResult& res, Isoperiodic expect) {
    Tally t(id, "isoperiodic-families", 0.0);
    t.add(res.kind == expect && res.oracle_agrees ? 0.0 : 1.0);
    t.note(std::string(to_string(res.kind)) + ", oracle " + std::to_string(res.verified) + "/" +
           std::to_string(res.sampled) + " members");
    rep.checks.push_back(t.done(o));
  };

  const Isoperiodic confocal = std::abs(d - r) <= Tolerance::geo * r ? Isoperiodic::Three
                               : d <= Tolerance::geo * r             ? Isoperiodic::Four
                                                                     : Isoperiodic::Neither;
  record("isoperiodic.confocal", classify_isoperiodic(c, ConfocalFamily{f, axis}), confocal);
  if (confocal == Isoperiodic::Neither) {
    const Point2d l = f + (c.center - f) * (d * d - r * r) / (d * d);
    record("isoperiodic.pivot-at-l", classify_isoperiodic(c, PivotFamily{f, l}), Isoperiodic::Four);
    const Point2d off = l + 0.3 * r * Vector2d(1.0, 0.7);
    if ((off - f).norm() > 1e-3 * r)
      record("isoperiodic.pivot-off-l", classify_isoperiodic(c, PivotFamily{f, off}), Isoperiodic::Neither);
  }
  return rep;
}

}  // namespace

bool VerificationReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"triangle", "quad-ef", "quad-general", "common-tangents", "isoperiodic"};
  return names;
}

VerificationReport run_suite(const std::string& suite, const Scene& scene, const SuiteOptions& opt) {
  if (suite == "triangle") return triangle_suite(scene, opt);
  if (suite == "quad-ef") return quad_ef_suite(scene, opt);
  if (suite == "quad-general") return quad_general_suite(scene, opt);
  if (suite == "common-tangents") return common_tangent_suite(scene, opt);
  if (suite == "isoperiodic") return isoperiodic_suite(scene, opt);
  throw Error(Errc::Validation, "unknown suite '" + suite + "'");
}

ojson to_json(const VerificationReport& r) {
  ojson checks = ojson::array();
  for (const CheckRecord& c : r.checks) {
    const RegisteredResult* res = find_result(c.result);
    ojson j;
    j["id"] = c.id;
    j["result"] = c.result;
    j["statement"] = res ? std::string(res->statement) : std::string();
    j["samples"] = c.samples;
    j["max_residual"] = std::isfinite(c.max_residual) ? ojson(c.max_residual) : ojson(nullptr);
    j["tolerance"] = c.tolerance;
    j["pass"] = c.pass;
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  ojson j;
  j["suite"] = r.suite;
  j["pass"] = r.pass();
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace poncelet::cli
