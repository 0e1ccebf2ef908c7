#include "scene.hpp"

#include <cmath>
#include <sstream>

namespace poncelet::cli {

std::vector<double> Range::values() const {
  std::vector<double> out;
  if (!(step > 0.0) || hi < lo) return out;
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  out.reserve(static_cast<std::size_t>(n + 1));
  for (long k = 0; k <= n; ++k) out.push_back(lo + static_cast<double>(k) * step);
  return out;
}

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::Validation, what); }

double number(const nlohmann::json& j, const char* what) {
  if (!j.is_number()) invalid(std::string(what) + " must be a number");
  return j.get<double>();
}

Point2d point(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) invalid(std::string(what) + " must be [x, y]");
  return {number(j[0], what), number(j[1], what)};
}

Range range(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) invalid(std::string(what) + " must be [lo, hi, step]");
  Range r{number(j[0], what), number(j[1], what), number(j[2], what)};
  if (!(r.step > 0.0) || r.hi < r.lo) invalid(std::string(what) + " needs lo <= hi and step > 0");
  return r;
}

}  // namespace

GeneralParabolad parabola_from_p(double p) { return GeneralParabolad(Point2d(0.0, 0.0), Line2d::vertical(-p)); }

Scene scene_from_json(const nlohmann::json& j) {
  if (!j.is_object()) invalid("scene must be a JSON object");
  Scene s;
  if (j.contains("circle")) {
    const auto& c = j["circle"];
    if (!c.is_object()) invalid("circle must be an object");
    s.circle.center = c.contains("center") ? point(c["center"], "circle.center") : Point2d(0.0, 0.0);
    s.circle.radius = c.contains("radius") ? number(c["radius"], "circle.radius") : 1.0;
  }
  if (j.contains("parabola")) {
    const auto& par = j["parabola"];
    if (!par.is_object()) invalid("parabola must be an object");
    if (par.contains("p")) {
      s.p = number(par["p"], "parabola.p");
      if (*s.p == 0.0) invalid("p must be nonzero");
      s.parabola = parabola_from_p(*s.p);
    } else if (par.contains("focus") && par.contains("directrix")) {
      const auto& d = par["directrix"];
      if (!d.is_array() || d.size() != 3) invalid("parabola.directrix must be [a, b, c] for a x + b y + c = 0");
      const double a = number(d[0], "directrix"), b = number(d[1], "directrix"), c = number(d[2], "directrix");
      if (a == 0.0 && b == 0.0) invalid("directrix needs a nonzero normal");
      s.parabola = GeneralParabolad(point(par["focus"], "parabola.focus"), Line2d(a, b, c));
    } else {
      invalid("parabola needs p, or focus and directrix");
    }
  }
  if (j.contains("vertex")) s.vertex = point(j["vertex"], "vertex");
  if (j.contains("sweep")) {
    const auto& sw = j["sweep"];
    if (sw.contains("ex")) s.ex_range = range(sw["ex"], "sweep.ex");
    if (sw.contains("ey")) s.ey_range = range(sw["ey"], "sweep.ey");
    if (sw.contains("p")) s.p_range = range(sw["p"], "sweep.p");
  }
  validate(s);
  return s;
}

ojson point_json(const Point2d& p) { return ojson::array({p.x(), p.y()}); }
ojson line_json(const Line2d& l) { return ojson::array({l.a(), l.b(), l.c()}); }

ojson to_json(const Scene& s) {
  ojson j;
  j["circle"] = {{"center", point_json(s.circle.center)}, {"radius", s.circle.radius}};
  if (s.parabola) {
    ojson par;
    if (s.p) par["p"] = *s.p;
    par["focus"] = point_json(s.parabola->focus);
    par["directrix"] = line_json(s.parabola->directrix);
    j["parabola"] = par;
  }
  if (s.vertex) j["vertex"] = point_json(*s.vertex);
  return j;
}

void validate(const Scene& s) {
  if (!is_finite(s.circle.center) || !std::isfinite(s.circle.radius)) invalid("circle must be finite");
  if (!(s.circle.radius > 0.0)) invalid("circle radius must be positive");
  if (s.parabola) {
    if (!is_finite(s.parabola->focus) || !std::isfinite(s.parabola->directrix.c())) invalid("parabola must be finite");
    if (s.parabola->focal_distance() <= Tolerance::geo * std::max(1.0, s.circle.radius))
      invalid("focus lies on the directrix (p = 0)");
  }
  if (s.vertex && !is_finite(*s.vertex)) invalid("vertex must be finite");
}

NormalizedScene<double> canonical(const Scene& s) {
  if (!s.parabola) invalid("scene needs a parabola (--p, or --focus with --directrix/--directrix-x)");
  return normalize_frame(s.circle, *s.parabola);
}

std::vector<double> parse_numbers(const std::string& text, std::size_t expected) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) invalid("not a number: '" + item + "'");
    } catch (const std::logic_error&) {
      invalid("not a number: '" + item + "'");
    }
  }
  if (expected != 0 && out.size() != expected)
    invalid("expected " + std::to_string(expected) + " comma-separated numbers, got '" + text + "'");
  return out;
}

Point2d parse_point(const std::string& text) {
  const auto v = parse_numbers(text, 2);
  return {v[0], v[1]};
}

}  // namespace poncelet::cli
