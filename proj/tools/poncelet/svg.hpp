#pragma once

#include "scene.hpp"

#include <optional>
#include <string>
#include <vector>

namespace poncelet::cli {

struct Mark {
  std::string label;
  Point2d at;
};

/// Everything a figure can show. Also the JSON shape accepted by `render`.
struct Figure {
  std::optional<Circled> circle;
  std::optional<GeneralParabolad> parabola;
  std::vector<std::vector<Point2d>> polygons;
  std::vector<std::vector<Point2d>> polylines;
  std::vector<Line2d> lines;
  std::vector<Mark> points;
  std::vector<Point2d> dots;
};

/// Throws Error(Validation) on malformed input. Unknown keys are ignored.
Figure figure_from_json(const nlohmann::json& j);
void add_to_json(const Figure& f, ojson& j);

/// SVG 1.1, y-up, px_per_unit pixels per unit. Identical input gives identical bytes.
std::string render_svg(const Figure& f, double px_per_unit = 100.0);

}  // namespace poncelet::cli
