#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace tropigon {

// Arbitrary-precision rational. All geometry in this library is exact.
using Rat = mpq_class;

// Canonical serialization: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

// Accepts an optional leading '-', digits, and an optional "/digits" part.
// Throws std::invalid_argument on anything else (including zero denominators).
Rat rat_parse(const std::string& s);

inline Rat rat_ll(long num, long den = 1) {
  Rat r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

}  // namespace tropigon
