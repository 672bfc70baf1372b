#pragma once

#include <vector>

#include "tropigon/subdivision.hpp"

namespace tropigon {

// Piecewise-linear concave profile g: the strict upper hull of the columnwise
// height maxima of a (transformed) lifted support. Breakpoints have strictly
// ascending x and strictly decreasing slopes.
struct GProfile {
  std::vector<std::pair<Rat, Rat>> bp;  // (x, g(x))
  Rat span() const { return bp.back().first - bp.front().first; }
};

GProfile g_profile(const LiftedSupport& ls, const Mat2& m = Mat2{});

// g at x; requires x within [first breakpoint, last breakpoint].
Rat g_eval(const GProfile& g, const Rat& x);

// Length of the superlevel set {g >= g(x)} (an interval, by concavity).
Rat g_hat(const GProfile& g, const Rat& x);

// Exact integral of g_hat over the domain. Equals span^2 / 2 when no piece
// of the profile is flat; a flat roof of length L adds L^2 / 2. The closed
// form is asserted against the piecewise integration.
Rat g_hat_integral(const GProfile& g);

}  // namespace tropigon
