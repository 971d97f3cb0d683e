#pragma once

#include <string>

#include "fgpal/word.hpp"

namespace fgpal {

/// Deterministic SVG picture of the circle diagram for exponent sums (X, Y):
/// the unit circle with the |X| + |Y| labeled points (p_1 at the top, indices
/// clockwise), the symmetry line through the origin, and the visit-order
/// polygon for the given first point. Identical inputs produce identical
/// bytes.
std::string render_circle_svg(int X, int Y, int first_point = 1);

}  // namespace fgpal
