#include "commands.hpp"

#include "registry.hpp"
#include "scene.hpp"
#include "suites.hpp"
#include "svg.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

namespace poncelet::cli {

namespace {

struct Options {
  std::string scene_path;
  std::optional<double> ex, ey, r, p;
  std::string focus, directrix;
  std::optional<double> directrix_x;
  std::optional<double> ax, ay;
  std::string point, quad;
  std::string out_path;
  std::string format;
  std::uint64_t seed{1};
  std::optional<double> tol;
  std::optional<int> samples;
  double scale{100.0};
  std::string suite{"all"};
  std::string kind;
  std::string what;
  int n{4};
  std::string ex_range, ey_range, p_range;
  std::string in_path;
};

[[noreturn]] void usage(const std::string& what) { throw Error(Errc::Validation, what); }

std::string num(double v) {
  char b[64];
  std::snprintf(b, sizeof b, "%.17g", v);
  return b;
}

Scene build_scene(const Options& o) {
  Scene s;
  if (!o.scene_path.empty()) {
    std::ifstream in(o.scene_path);
    if (!in) usage("cannot read scene file '" + o.scene_path + "'");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      usage("malformed scene JSON: " + std::string(e.what()));
    }
    s = scene_from_json(j);
  }
  if (o.ex) s.circle.center.x() = *o.ex;
  if (o.ey) s.circle.center.y() = *o.ey;
  if (o.r) s.circle.radius = *o.r;
  const bool general = !o.focus.empty() || !o.directrix.empty() || o.directrix_x;
  if (o.p && general) usage("give either --p or --focus with --directrix/--directrix-x, not both");
  if (o.p) {
    if (*o.p == 0.0) usage("p must be nonzero");
    s.p = *o.p;
    s.parabola = parabola_from_p(*o.p);
  } else if (general) {
    const Point2d f = o.focus.empty() ? Point2d(0.0, 0.0) : parse_point(o.focus);
    if (o.directrix_x && !o.directrix.empty()) usage("give one of --directrix and --directrix-x");
    if (!o.directrix_x && o.directrix.empty()) usage("--focus needs --directrix or --directrix-x");
    Line2d l = Line2d::vertical(0.0);
    if (o.directrix_x) {
      l = Line2d::vertical(*o.directrix_x);
    } else {
      const auto c = parse_numbers(o.directrix, 3);
      if (c[0] == 0.0 && c[1] == 0.0) usage("directrix needs a nonzero normal");
      l = Line2d(c[0], c[1], c[2]);
    }
    s.p.reset();
    s.parabola = GeneralParabolad(f, l);
  }
  if (o.ax || o.ay) {
    if (!o.ax || !o.ay) usage("--ax and --ay go together");
    s.vertex = Point2d(*o.ax, *o.ay);
  }
  if (!o.ex_range.empty()) {
    const auto v = parse_numbers(o.ex_range, 3);
    s.ex_range = Range{v[0], v[1], v[2]};
  }
  if (!o.ey_range.empty()) {
    const auto v = parse_numbers(o.ey_range, 3);
    s.ey_range = Range{v[0], v[1], v[2]};
  }
  if (!o.p_range.empty()) {
    const auto v = parse_numbers(o.p_range, 3);
    s.p_range = Range{v[0], v[1], v[2]};
  }
  for (const auto* rg : {&s.ex_range, &s.ey_range, &s.p_range})
    if (*rg && (!((*rg)->step > 0.0) || (*rg)->hi < (*rg)->lo)) usage("ranges are lo,hi,step with lo <= hi and step > 0");
  validate(s);
  return s;
}

/// Focus at the origin, vertical directrix through L (scaled to the circle).
void derive_parabola_through_l(Scene& s) {
  if (s.parabola) return;
  const Point2d e = s.circle.center / s.circle.radius;
  if (e.norm() <= Tolerance::geo) throw Error(Errc::Configuration, "E = F: L is undefined, give --p");
  if (std::abs(q_of(e)) <= Tolerance::alg) throw Error(Errc::Configuration, "the circle passes through the focus: L = F");
  const double p = l_point(e).p * s.circle.radius;
  s.p = p;
  s.parabola = parabola_from_p(p);
}

void emit(const Options& o, const std::string& content, std::ostream& out) {
  if (o.out_path.empty()) {
    out << content;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) usage("cannot write '" + o.out_path + "'");
  f << content;
}

std::string format_or(const Options& o, const char* fallback, std::initializer_list<const char*> allowed) {
  const std::string f = o.format.empty() ? fallback : o.format;
  for (const char* a : allowed)
    if (f == a) return f;
  usage("format '" + f + "' is not available for this command");
}

/// Maps canonical-frame results back to the input frame.
struct Back {
  Similarityd inv;
  Point2d operator()(const Point2d& x) const { return inv.apply(x); }
  Line2d operator()(const Line2d& l) const { return inv.apply(l); }
};

Point2d vertex_in_canonical(const Scene& s, const NormalizedScene<double>& w) {
  if (!s.vertex) usage("give a vertex with --ax and --ay");
  if (s.circle.distance(*s.vertex) > Tolerance::geo * s.circle.radius) usage("the vertex is not on the circle");
  const Point2d a = w.to_canonical.apply(*s.vertex);
  // Put the vertex back on the unit circle exactly.
  return w.circle.center + (a - w.circle.center).normalized();
}

ojson points_json(std::span<const Point2d> v, const Back& back) {
  ojson a = ojson::array();
  for (const Point2d& p : v) a.push_back(point_json(back(p)));
  return a;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  Scene s = build_scene(o);
  SuiteOptions so;
  so.seed = o.seed;
  so.tol = o.tol;
  if (o.samples) {
    if (*o.samples < 1) usage("--samples must be positive");
    so.samples = *o.samples;
  }
  std::vector<std::string> suites;
  if (o.suite == "all") suites = suite_names();
  else suites = {o.suite};
  if (o.suite == "quad-general" || (o.suite == "all" && !s.parabola)) {
    try {
      derive_parabola_through_l(s);
    } catch (const Error&) {
      if (o.suite != "all") throw;
    }
  }
  if (!s.parabola && o.suite != "isoperiodic") usage("scene needs a parabola (--p, or --focus with --directrix/--directrix-x)");

  std::vector<VerificationReport> reports;
  ojson skipped = ojson::array();
  for (const std::string& name : suites) {
    try {
      reports.push_back(run_suite(name, s, so));
    } catch (const Error& e) {
      if (o.suite != "all" || e.code() == Errc::Validation) throw;
      skipped.push_back({{"suite", name}, {"reason", e.what()}});
    }
  }
  bool pass = !reports.empty();
  for (const VerificationReport& r : reports) pass = pass && r.pass();

  const std::string fmt = format_or(o, "json", {"json", "csv"});
  std::string body;
  if (fmt == "json") {
    ojson j;
    j["scene"] = to_json(s);
    j["seed"] = o.seed;
    j["pass"] = pass;
    j["reports"] = ojson::array();
    for (const VerificationReport& r : reports) j["reports"].push_back(to_json(r));
    if (!skipped.empty()) j["skipped"] = skipped;
    body = j.dump(2) + "\n";
  } else {
    std::ostringstream csv;
    csv << "suite,id,result,samples,max_residual,tolerance,pass\n";
    for (const VerificationReport& r : reports)
      for (const CheckRecord& c : r.checks)
        csv << r.suite << ',' << c.id << ',' << c.result << ',' << c.samples << ','
            << (std::isfinite(c.max_residual) ? num(c.max_residual) : "inf") << ',' << num(c.tolerance) << ','
            << (c.pass ? 1 : 0) << '\n';
    body = csv.str();
  }
  emit(o, body, out);
  for (const VerificationReport& r : reports)
    for (const CheckRecord& c : r.checks)
      if (!c.pass)
        err << "FAIL " << r.suite << '/' << c.id << ": max residual "
            << (std::isfinite(c.max_residual) ? num(c.max_residual) : "inf") << " > " << num(c.tolerance)
            << (c.note.empty() ? "" : " (" + c.note + ")") << '\n';
  return pass ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------- construct

std::string finish_figure(const Options& o, ojson j, const Figure& fig) {
  const std::string fmt = format_or(o, "json", {"json", "svg"});
  if (fmt == "svg") return render_svg(fig, o.scale);
  add_to_json(fig, j);
  return j.dump(2) + "\n";
}

int construct_triangle(const Options& o, std::ostream& out) {
  const Scene s = build_scene(o);
  const NormalizedScene<double> w = canonical(s);
  const Point2d a = vertex_in_canonical(s, w);
  const PonceletTriangle t = build_triangle(a, w.circle, w.parabola);
  const TriangleCenters c = t.trivial ? synthetic_centers(t.vertices) : centers(a, w.circle, w.parabola);
  const Back back{w.to_canonical.inverse()};
  ojson j;
  j["kind"] = "triangle";
  j["vertices"] = points_json(t.vertices, back);
  j["contacts"] = points_json(t.contacts, back);
  j["closure_residual"] = t.closure_residual;
  j["trivial"] = t.trivial;
  j["centers"] = {{"orthocenter", point_json(back(c.orthocenter))},
                  {"centroid", point_json(back(c.centroid))},
                  {"nine_point", point_json(back(c.nine_point))},
                  {"circumcenter", point_json(back(c.circumcenter))}};
  Figure fig{s.circle, s.parabola, {}, {}, {}, {}, {}};
  std::vector<Point2d> poly;
  for (const Point2d& v : t.vertices) poly.push_back(back(v));
  fig.polygons.push_back(poly);
  const char* names[] = {"A", "B", "C"};
  for (int k = 0; k < 3; ++k) fig.points.push_back({names[k], poly[static_cast<std::size_t>(k)]});
  fig.points.push_back({"O", back(c.orthocenter)});
  fig.points.push_back({"G", back(c.centroid)});
  fig.points.push_back({"N", back(c.nine_point)});
  fig.points.push_back({"E", s.circle.center});
  fig.points.push_back({"F", s.parabola->focus});
  if (!c.degenerate_euler) fig.lines.push_back(Line2d::through(back(c.orthocenter), s.circle.center));
  emit(o, finish_figure(o, j, fig), out);
  return kPass;
}

void quad_json(const PonceletQuad& q, const Back& back, ojson& j, Figure& fig) {
  j["vertices"] = points_json(q.vertices, back);
  j["contacts"] = points_json(q.contacts, back);
  j["closure_residual"] = q.closure_residual;
  const QuadDerivedPoints dp = quad_derived_points(q);
  if (q.diagonal_point) j["diagonal_point"] = point_json(back(*q.diagonal_point));
  if (dp.i) j["i"] = point_json(back(*dp.i));
  if (dp.j) j["j"] = point_json(back(*dp.j));
  j["anticenter"] = point_json(back(dp.anticenter));
  j["centroid"] = point_json(back(dp.centroid));
  std::vector<Point2d> poly;
  for (const Point2d& v : q.vertices) poly.push_back(back(v));
  fig.polygons.push_back(poly);
  const char* names[] = {"A", "B", "C", "D"};
  for (int k = 0; k < 4; ++k) fig.points.push_back({names[k], poly[static_cast<std::size_t>(k)]});
  if (dp.i) fig.points.push_back({"I", back(*dp.i)});
  if (dp.j) fig.points.push_back({"J", back(*dp.j)});
  if (q.diagonal_point) fig.points.push_back({"L", back(*q.diagonal_point)});
  fig.points.push_back({"T", back(dp.anticenter)});
}

int construct_butterfly(const Options& o, std::ostream& out) {
  const Scene s = build_scene(o);
  const NormalizedScene<double> w = canonical(s);
  if (w.circle.center.norm() > Tolerance::geo) throw Error(Errc::Configuration, "butterflies need the circle centered at the focus");
  if (std::abs(w.parabola.p) >= 2.0) throw Error(Errc::Configuration, "|p| >= 2R: no butterfly exists");
  const Point2d a = vertex_in_canonical(s, w);
  const PonceletQuad q = build_butterfly(a, w.circle, w.parabola);
  const Back back{w.to_canonical.inverse()};
  ojson j;
  j["kind"] = "butterfly";
  Figure fig{s.circle, s.parabola, {}, {}, {}, {}, {}};
  quad_json(q, back, j, fig);
  fig.points.push_back({"F", s.parabola->focus});
  emit(o, finish_figure(o, j, fig), out);
  return kPass;
}

int construct_quad(const Options& o, std::ostream& out) {
  Scene s = build_scene(o);
  derive_parabola_through_l(s);
  const NormalizedScene<double> w = canonical(s);
  const Point2d a = vertex_in_canonical(s, w);
  const PonceletQuad q = build_quad_through_L(a, w.circle, w.parabola);
  const Back back{w.to_canonical.inverse()};
  ojson j;
  j["kind"] = "quad";
  if (s.p) j["p"] = *s.p;
  Figure fig{s.circle, s.parabola, {}, {}, {}, {}, {}};
  quad_json(q, back, j, fig);
  fig.points.push_back({"E", s.circle.center});
  fig.points.push_back({"F", s.parabola->focus});
  emit(o, finish_figure(o, j, fig), out);
  return kPass;
}

int construct_tangents(const Options& o, std::ostream& out) {
  const Scene s = build_scene(o);
  if (!s.parabola) usage("give the parabola with --focus and --directrix-x/--directrix (or --p)");
  Point2d a;
  if (!o.point.empty()) a = parse_point(o.point);
  else if (s.vertex) a = *s.vertex;
  else usage("give the external point with --point x,y");
  const auto ts = compass_tangents(s.parabola->focus, s.parabola->directrix, a);
  ojson j;
  j["kind"] = "tangents";
  j["point"] = point_json(a);
  j["count"] = ts.size();
  j["tangents"] = ojson::array();
  Figure fig{std::nullopt, s.parabola, {}, {}, {}, {}, {}};
  fig.points.push_back({"P", a});
  fig.points.push_back({"F", s.parabola->focus});
  for (std::size_t k = 0; k < ts.size(); ++k) {
    j["tangents"].push_back({{"line", line_json(ts[k].line)}, {"contact", point_json(ts[k].contact)}, {"t", point_json(ts[k].t)}});
    fig.lines.push_back(ts[k].line);
    fig.points.push_back({"T" + std::to_string(k + 1), ts[k].contact});
  }
  if (ts.size() == 2) {
    const double c = std::abs(ts[0].line.direction().dot(ts[1].line.direction()));
    j["perpendicular"] = c <= Tolerance::geo;
  }
  emit(o, finish_figure(o, j, fig), out);
  return kPass;
}

int construct_inscribe(const Options& o, std::ostream& out) {
  if (o.quad.empty()) usage("give the quadrilateral with --quad x1,y1,x2,y2,x3,y3,x4,y4");
  const auto v = parse_numbers(o.quad, 8);
  const std::array<Point2d, 4> q{Point2d(v[0], v[1]), Point2d(v[2], v[3]), Point2d(v[4], v[5]), Point2d(v[6], v[7])};
  const GeneralParabolad par = inscribe_parabola_in_cyclic_quad(q[0], q[1], q[2], q[3]);
  const std::optional<Circled> circ = circumcircle(q[0], q[1], q[2]);
  ojson j;
  j["kind"] = "inscribe";
  j["focus"] = point_json(par.focus);
  j["directrix"] = line_json(par.directrix);
  j["side_tangency"] = ojson::array();
  for (int k = 0; k < 4; ++k) j["side_tangency"].push_back(par.tangency(Line2d::through(q[k], q[(k + 1) % 4])));
  Figure fig{circ, par, {{q.begin(), q.end()}}, {}, {}, {}, {}};
  const char* names[] = {"A", "B", "C", "D"};
  for (int k = 0; k < 4; ++k) fig.points.push_back({names[k], q[static_cast<std::size_t>(k)]});
  fig.points.push_back({"F", par.focus});
  emit(o, finish_figure(o, j, fig), out);
  return kPass;
}

int cmd_construct(const Options& o, std::ostream& out) {
  if (o.kind == "triangle") return construct_triangle(o, out);
  if (o.kind == "butterfly") return construct_butterfly(o, out);
  if (o.kind == "quad") return construct_quad(o, out);
  if (o.kind == "tangents") return construct_tangents(o, out);
  if (o.kind == "inscribe") return construct_inscribe(o, out);
  usage("unknown construction '" + o.kind + "'");
}

// ---------------------------------------------------------------- loci

enum class Family { Triangle, Butterfly, Quad };

Family family_of(const NormalizedScene<double>& w) {
  const Point2d e = w.circle.center;
  if (std::abs(q_of(e)) <= Tolerance::alg) return Family::Triangle;
  if (e.norm() <= Tolerance::geo) {
    if (std::abs(w.parabola.p) >= 2.0) throw Error(Errc::Configuration, "closure condition unmet: |p| >= 2R");
    return Family::Butterfly;
  }
  if (std::abs(l_point(e).p - w.parabola.p) <= Tolerance::geo) return Family::Quad;
  throw Error(Errc::Configuration,
              "closure condition unmet: the circle must pass through the focus, be centered at it, or the directrix "
              "must pass through L");
}

std::vector<std::vector<Point2d>> polygons(const NormalizedScene<double>& w, Family fam, int samples) {
  std::vector<std::vector<Point2d>> out;
  const Circled& c = w.circle;
  for (int k = 0; k < samples; ++k) {
    const Point2d a = c.at(2.0 * std::numbers::pi * k / samples);
    if (eval_S(a, w.parabola) <= 1e-9) continue;
    try {
      if (fam == Family::Triangle) {
        const auto t = build_triangle(a, c, w.parabola);
        out.emplace_back(t.vertices.begin(), t.vertices.end());
      } else {
        const auto q = fam == Family::Butterfly ? build_butterfly(a, c, w.parabola) : build_quad_through_L(a, c, w.parabola);
        out.emplace_back(q.vertices.begin(), q.vertices.end());
      }
    } catch (const Error&) {
      // Vertex on a degenerate chord: no polygon from this start.
    }
  }
  return out;
}

int cmd_loci(const Options& o, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> kinds{"orthocenter", "centroid", "ninepoint", "pedal", "anticenter", "midpoints"};
  if (std::find(kinds.begin(), kinds.end(), o.what) == kinds.end()) usage("unknown locus '" + o.what + "'");
  const Scene s = build_scene(o);
  const NormalizedScene<double> w = canonical(s);
  const Family fam = family_of(w);
  const Point2d e = w.circle.center;
  const double p = w.parabola.p;
  const int samples = o.samples.value_or(360);
  if (samples < 1) usage("--samples must be positive");
  const bool euler = o.what == "orthocenter" || o.what == "centroid" || o.what == "ninepoint";
  if (euler && fam != Family::Triangle) throw Error(Errc::Configuration, "closure condition unmet: the circle must pass through the focus");
  if (o.what == "anticenter" && fam == Family::Triangle)
    throw Error(Errc::Configuration, "the anticenter locus needs quadrilaterals (E = F, or the directrix through L)");

  struct Sample {
    Point2d at;
    double deviation;
  };
  std::vector<Sample> pts;
  std::optional<Line2d> line;  // analytic line, canonical frame
  std::vector<Point2d> curve;  // analytic curve, canonical frame
  for (const auto& poly : polygons(w, fam, samples)) {
    Point2d sum = Point2d::Zero();
    for (const Point2d& v : poly) sum += v;
    if (euler) {
      const Point2d h = sum - 2.0 * e;
      if (o.what == "orthocenter") pts.push_back({h, std::abs(h.x() + p)});
      if (o.what == "centroid") pts.push_back({sum / 3.0, std::abs(sum.x() / 3.0 - (2.0 * e.x() - p) / 3.0)});
      if (o.what == "ninepoint") pts.push_back({midpoint(h, e), std::abs(midpoint(h, e).x() - (e.x() - p) / 2.0)});
    } else if (o.what == "anticenter") {
      const Point2d t = 0.5 * sum - e;
      pts.push_back({t, std::abs(t.x() + p)});
    } else {
      for (std::size_t k = 0; k < poly.size(); ++k) {
        const Point2d m = midpoint(poly[k], poly[(k + 1) % poly.size()]);
        const double sc = 1.0 + m.norm() + e.norm() + std::abs(p);
        pts.push_back({m, std::abs(pedal_curve_residual(m, e, p)) / (sc * sc * sc)});
      }
    }
  }
  if (pts.empty()) throw Error(Errc::Configuration, "no admissible vertices on the circle");
  if (o.what == "orthocenter" || o.what == "anticenter") line = Line2d::vertical(-p);
  if (o.what == "centroid") line = Line2d::vertical((2.0 * e.x() - p) / 3.0);
  if (o.what == "ninepoint") line = Line2d::vertical((e.x() - p) / 2.0);
  if (o.what == "pedal" || o.what == "midpoints") {
    for (int k = 1; k < 512; ++k) curve.push_back(pedal_point(std::tan(std::numbers::pi * (k / 512.0 - 0.5)), e, p));
  }

  double worst = 0.0, ylo = 1e300, yhi = -1e300;
  for (const Sample& x : pts) {
    worst = std::max(worst, x.deviation);
    ylo = std::min(ylo, x.at.y()), yhi = std::max(yhi, x.at.y());
  }
  const double tol = o.tol.value_or(1e-8);
  const bool pass = worst <= tol;
  const Back back{w.to_canonical.inverse()};
  std::vector<Point2d> analytic;
  if (line) analytic = {line->project(Point2d(0.0, ylo)), line->project(Point2d(0.0, yhi))};
  else analytic = curve;

  const std::string fmt = format_or(o, "csv", {"csv", "json", "svg"});
  std::string body;
  if (fmt == "csv") {
    std::ostringstream csv;
    csv << "kind,index,x,y,deviation\n";
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const Point2d q = back(pts[k].at);
      csv << "sample," << k << ',' << num(q.x()) << ',' << num(q.y()) << ',' << num(pts[k].deviation) << '\n';
    }
    for (std::size_t k = 0; k < analytic.size(); ++k) {
      const Point2d q = back(analytic[k]);
      csv << "analytic," << k << ',' << num(q.x()) << ',' << num(q.y()) << ",0\n";
    }
    body = csv.str();
  } else if (fmt == "json") {
    ojson j;
    j["locus"] = o.what;
    j["samples"] = pts.size();
    j["max_deviation"] = worst;
    j["tolerance"] = tol;
    j["pass"] = pass;
    j["extent"] = yhi - ylo;
    ojson a = ojson::array();
    for (const Sample& x : pts) a.push_back({{"at", point_json(back(x.at))}, {"deviation", x.deviation}});
    j["points"] = a;
    if (line) j["analytic_line"] = line_json(back(*line));
    else j["analytic_curve"] = points_json(analytic, back);
    body = j.dump(2) + "\n";
  } else {
    Figure fig{s.circle, s.parabola, {}, {}, {}, {}, {}};
    for (const Sample& x : pts) fig.dots.push_back(back(x.at));
    if (line) fig.lines.push_back(back(*line));
    else {
      // Keep the curve near the samples; it runs off to infinity along its asymptote.
      Eigen::AlignedBox2d box(w.circle.center - Vector2d(1, 1), w.circle.center + Vector2d(1, 1));
      for (const Sample& x : pts) box.extend(x.at);
      const Vector2d pad = 0.25 * box.sizes();
      box.extend(box.min() - pad).extend(box.max() + pad);
      std::vector<Point2d> run;
      for (const Point2d& q : curve) {
        if (box.contains(q)) {
          run.push_back(back(q));
        } else if (!run.empty()) {
          fig.polylines.push_back(std::move(run));
          run.clear();
        }
      }
      if (!run.empty()) fig.polylines.push_back(std::move(run));
    }
    body = render_svg(fig, o.scale);
  }
  emit(o, body, out);
  err << "loci " << o.what << ": " << pts.size() << " points, max deviation " << num(worst) << " (tolerance " << num(tol)
      << "), extent along the line " << num(yhi - ylo) << '\n';
  return pass ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------- sweep

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  const Scene s = build_scene(o);
  if (o.n != 3 && o.n != 4) usage("--n must be 3 or 4");
  if (s.parabola && !s.p) usage("sweeps use the canonical parabola: give --p or --p-range");
  const std::vector<double> xs = s.ex_range ? s.ex_range->values() : std::vector<double>{s.circle.center.x()};
  const std::vector<double> ys = s.ey_range ? s.ey_range->values() : std::vector<double>{s.circle.center.y()};
  std::vector<double> ps;
  if (s.p_range) ps = s.p_range->values();
  else if (s.p) ps = {*s.p};
  else usage("give --p or --p-range");
  if (xs.size() * ys.size() * ps.size() > 5'000'000) usage("sweep grid too large");

  struct Row {
    double x, y, p, residual;
    bool valid;
  };
  std::vector<Row> rows;
  for (double x : xs)
    for (double y : ys) {
      const Circled c(Point2d(x, y), s.circle.radius);
      for (const SweepSample& r : sweep_p(c, ps, o.n)) rows.push_back({x, y, r.p, r.residual, r.valid});
    }
  const Row* best = nullptr;
  for (const Row& r : rows)
    if (r.valid && (!best || r.residual < best->residual)) best = &r;

  const std::string fmt = format_or(o, "csv", {"csv", "json"});
  std::string body;
  if (fmt == "csv") {
    std::ostringstream csv;
    csv << "x_e,y_e,p,residual,valid\n";
    for (const Row& r : rows)
      csv << num(r.x) << ',' << num(r.y) << ',' << num(r.p) << ',' << (r.valid ? num(r.residual) : "") << ','
          << (r.valid ? 1 : 0) << '\n';
    body = csv.str();
  } else {
    ojson j;
    j["n"] = o.n;
    j["rows"] = ojson::array();
    for (const Row& r : rows)
      j["rows"].push_back({{"x_e", r.x}, {"y_e", r.y}, {"p", r.p}, {"residual", r.valid ? ojson(r.residual) : ojson(nullptr)},
                           {"valid", r.valid}});
    if (best) j["minimum"] = {{"x_e", best->x}, {"y_e", best->y}, {"p", best->p}, {"residual", best->residual}};
    body = j.dump(2) + "\n";
  }
  emit(o, body, out);
  if (best)
    err << "sweep: " << rows.size() << " rows, minimum residual " << num(best->residual) << " at x_e=" << num(best->x)
        << " y_e=" << num(best->y) << " p=" << num(best->p) << '\n';
  else
    err << "sweep: " << rows.size() << " rows, none admissible\n";
  return kPass;
}

// ---------------------------------------------------------------- render

int cmd_render(const Options& o, std::ostream& out) {
  format_or(o, "svg", {"svg"});
  std::string text;
  if (o.in_path.empty() || o.in_path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(o.in_path, std::ios::binary);
    if (!in) usage("cannot read '" + o.in_path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    usage("malformed JSON: " + std::string(e.what()));
  }
  emit(o, render_svg(figure_from_json(j), o.scale), out);
  return kPass;
}

void scene_options(CLI::App* app, Options& o) {
  app->add_option("--scene", o.scene_path, "Scene JSON file; flags override its values");
  app->add_option("--ex", o.ex, "Circle center x");
  app->add_option("--ey", o.ey, "Circle center y");
  app->add_option("--r", o.r, "Circle radius (default 1)");
  app->add_option("--p", o.p, "Parabola y^2 = 2 p x + p^2 (focus at the origin)");
  app->add_option("--focus", o.focus, "Focus x,y");
  app->add_option("--directrix", o.directrix, "Directrix a,b,c for a x + b y + c = 0");
  app->add_option("--directrix-x", o.directrix_x, "Vertical directrix x = value");
  app->add_option("--ax", o.ax, "Vertex x");
  app->add_option("--ay", o.ay, "Vertex y");
}

void output_options(CLI::App* app, Options& o) {
  app->add_option("--out", o.out_path, "Write to this file instead of stdout");
  app->add_option("--format", o.format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
  app->add_option("--seed", o.seed, "Sampling seed");
  app->add_option("--tol", o.tol, "Override every check tolerance")->check(CLI::PositiveNumber);
  app->add_option("--scale", o.scale, "SVG pixels per unit")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Poncelet polygons inscribed in a circle and circumscribed about a parabola", "poncelet"};
  app.require_subcommand(1, 1);

  auto* verify = app.add_subcommand("verify", "Run a verification suite and report every check");
  scene_options(verify, o);
  output_options(verify, o);
  verify->add_option("--suite", o.suite, "triangle, quad-ef, quad-general, common-tangents, isoperiodic or all")
      ->check(CLI::IsMember({"triangle", "quad-ef", "quad-general", "common-tangents", "isoperiodic", "all"}));
  verify->add_option("--samples", o.samples, "Samples per check (default 200)");

  auto* construct = app.add_subcommand("construct", "Build one polygon, tangent pair or inscribed parabola");
  construct->add_option("kind", o.kind, "triangle, butterfly, quad, tangents or inscribe")
      ->required()
      ->check(CLI::IsMember({"triangle", "butterfly", "quad", "tangents", "inscribe"}));
  scene_options(construct, o);
  output_options(construct, o);
  construct->add_option("--point", o.point, "External point x,y (tangents)");
  construct->add_option("--quad", o.quad, "Cyclic quadrilateral x1,y1,...,x4,y4 (inscribe)");

  auto* loci = app.add_subcommand("loci", "Sample a locus and compare it with its analytic form");
  loci->add_option("what", o.what, "orthocenter, centroid, ninepoint, pedal, anticenter or midpoints")
      ->required()
      ->check(CLI::IsMember({"orthocenter", "centroid", "ninepoint", "pedal", "anticenter", "midpoints"}));
  scene_options(loci, o);
  output_options(loci, o);
  loci->add_option("--samples", o.samples, "Vertex samples around the circle (default 360)");

  auto* sweep = app.add_subcommand("sweep", "Closure residuals over a grid of (x_E, y_E, p)");
  scene_options(sweep, o);
  output_options(sweep, o);
  sweep->add_option("--n", o.n, "Closure length, 3 or 4");
  sweep->add_option("--ex-range", o.ex_range, "lo,hi,step");
  sweep->add_option("--ey-range", o.ey_range, "lo,hi,step");
  sweep->add_option("--p-range", o.p_range, "lo,hi,step");

  auto* render = app.add_subcommand("render", "Render scene or construction JSON to SVG");
  render->add_option("--in", o.in_path, "JSON file, - for stdin");
  output_options(render, o);

  std::vector<const char*> argv{"poncelet"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (construct->parsed()) return cmd_construct(o, out);
    if (loci->parsed()) return cmd_loci(o, out, err);
    if (sweep->parsed()) return cmd_sweep(o, out, err);
    return cmd_render(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::InconsistentQuad ? kCheckFailed : kUsage;
  }
}

}  // namespace poncelet::cli
