#pragma once

#include "poncelet/poncelet.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace poncelet::cli {

using ojson = nlohmann::ordered_json;

/// lo, hi, step; inclusive of hi up to rounding.
struct Range {
  double lo{0.0};
  double hi{0.0};
  double step{1.0};
  std::vector<double> values() const;
};

struct Scene {
  Circled circle{Point2d(0.0, 0.0), 1.0};
  std::optional<GeneralParabolad> parabola;
  /// Set when the parabola was given by p alone (focus at the origin, directrix x = -p).
  std::optional<double> p;
  std::optional<Point2d> vertex;
  std::optional<Range> ex_range;
  std::optional<Range> ey_range;
  std::optional<Range> p_range;
};

/// Throws Error(Validation) for malformed or inadmissible input.
Scene scene_from_json(const nlohmann::json& j);
ojson to_json(const Scene& s);

/// Positive radius, p != 0, focus off the directrix, finite numbers.
void validate(const Scene& s);

/// The scene carried into the canonical frame. Requires a parabola.
NormalizedScene<double> canonical(const Scene& s);

/// Parabola with focus at the origin and directrix x = -p.
GeneralParabolad parabola_from_p(double p);

std::vector<double> parse_numbers(const std::string& text, std::size_t expected);
Point2d parse_point(const std::string& text);

ojson point_json(const Point2d& p);
ojson line_json(const Line2d& l);

}  // namespace poncelet::cli
