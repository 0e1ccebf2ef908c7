#include "registry.hpp"

#include <algorithm>
#include <array>

namespace poncelet::cli {

namespace {

constexpr std::array<RegisteredResult, 31> kResults{{
    {"polar-tangency", "line AB touches the parabola iff S_AA S_BB = S_AB^2"},
    {"tangents-from-point", "a point outside, on or inside the parabola has 2, 1 or 0 tangents"},
    {"tangent-chord-second-point", "closed form for the second circle point on a tangent from a circle point"},
    {"common-tangent-locus", "points where a common tangent touches the circle lie on the locus conic"},
    {"common-tangent-quartic", "abscissae of common-tangent points are roots of the common-tangent quartic"},
    {"centered-common-tangents", "circle centered at the focus: common tangents touch it at (-p/2, +-sqrt(4 - p^2)/2)"},
    {"pencil-discriminant", "circles through the focus: pencil discriminants with the parabola and the locus conic agree up to p^2"},
    {"focal-kite", "a tangent at a circle/parabola crossing ends on a common tangent iff T2F is parallel to BE"},
    {"common-tangent-correspondence", "circle through the focus: tangents pair crossings with common-tangent points"},
    {"triangle-closure", "a non-trivial inscribed/circumscribed triangle exists iff the circle passes through the focus"},
    {"closure-defect-identity", "S_BB S_CC - S_BC^2 = -4 p S_AA Q(E) f(A) / |A|^4"},
    {"orthocenter-on-directrix", "the orthocenter of every such triangle lies on the directrix"},
    {"euler-abscissae", "centroid and nine-point center stay on fixed vertical lines"},
    {"orthocenter-extremes", "orthocenter extremes occur at common-tangent points; the centroid segment is a third as long"},
    {"pedal-curve", "side midpoints lie on the pedal curve of the parabola with respect to E"},
    {"orthocenter-first-construction", "the triangle is recovered from its orthocenter and two tangents"},
    {"butterfly-closure", "circle centered at the focus with |p| < 2R: every exterior point starts a closing quadrilateral"},
    {"butterfly-chord-criterion", "circle centered at the focus: chord AB touches the parabola iff x_A + x_B = -p"},
    {"antiparallelogram", "butterflies are antiparallelograms with vertical diagonals"},
    {"side-intersection-inversion", "opposite sides of a butterfly meet on the axis at inverse points x_G x_H = 1"},
    {"butterfly-midline", "side midpoints of a butterfly lie on x = -p/2"},
    {"compass-tangents", "ruler-and-compass tangents match the polar-form tangents"},
    {"trapezoid-parabola", "every isosceles trapezoid carries a parabola touching its legs and diagonals"},
    {"prescribed-diagonal-point", "a quadrilateral with a prescribed diagonal point exists in the circle centered at the focus"},
    {"diagonal-point", "the diagonals of every such quadrilateral meet at L = E Q(E) / |E|^2"},
    {"unique-closing-directrix", "for E != F the quadrilateral closes iff the directrix passes through L"},
    {"quad-anticenter", "the anticenter lies on the directrix"},
    {"quad-vertex-sum", "vertex abscissae sum to 2 (x_E - p)"},
    {"quad-nine-point", "F and the vertex centroid lie on the nine-point circle of IJL"},
    {"inscribed-parabola", "a cyclic quadrilateral carries a parabola touching its four sides, recovered from I, J, E and L"},
    {"isoperiodic-families", "confocal families are 3- or 4-isoperiodic iff F is on the circle or at its center; "
                             "directrices through L give a 4-isoperiodic family"},
}};

}  // namespace

std::span<const RegisteredResult> registry() { return kResults; }

const RegisteredResult* find_result(std::string_view id) {
  const auto it = std::find_if(kResults.begin(), kResults.end(), [&](const RegisteredResult& r) { return r.id == id; });
  return it == kResults.end() ? nullptr : &*it;
}

}  // namespace poncelet::cli
