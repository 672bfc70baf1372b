#pragma once

#include <string>

#include "tropigon/curve.hpp"
#include "tropigon/subdivision.hpp"

namespace tropigon {

// Side-by-side rendering: Newton polygon subdivision on the left, tropical
// curve on the right. One <polygon> per cell, one <path> per curve edge/ray;
// rays clipped to a box 1.5x the vertex spread; weights > 1 labeled.
// Pass curve == nullptr for degenerate (dim < 2) inputs.
std::string render_svg(const Subdivision& sub, const TropicalCurve* curve);

}  // namespace tropigon
