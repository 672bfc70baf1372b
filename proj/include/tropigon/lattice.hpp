#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "tropigon/rational.hpp"

namespace tropigon {

struct Pt {
  long x = 0, y = 0;
  auto operator<=>(const Pt&) const = default;
};

inline Pt operator+(Pt a, Pt b) { return {a.x + b.x, a.y + b.y}; }
inline Pt operator-(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }
inline Pt operator-(Pt a) { return {-a.x, -a.y}; }
inline long cross(Pt a, Pt b) { return a.x * b.y - a.y * b.x; }
inline long dot(Pt a, Pt b) { return a.x * b.x + a.y * b.y; }

// Primitive integer direction. Canonical representative of {u, -u} has
// x > 0, or x == 0 and y > 0.
struct Dir {
  long x = 1, y = 0;
  auto operator<=>(const Dir&) const = default;
  Pt pt() const { return {x, y}; }
};

Dir canonical_dir(long x, long y);  // throws on (0, 0)
Pt primitive(Pt v);                           // keeps orientation, throws on (0, 0)
inline Pt rot90cw(Pt v) { return {v.y, -v.x}; }

// Strictly convex hull, counterclockwise, starting at the lexicographically
// least vertex. Duplicates removed. Collinear input yields the two extreme
// points, a single point yields itself.
std::vector<Pt> convex_hull(std::vector<Pt> pts);

// -1 empty, 0 point, 1 segment, 2 polygon.
int hull_dim(const std::vector<Pt>& hull);

// Twice the Euclidean area of a CCW hull.
long area2(const std::vector<Pt>& hull);

// Number of lattice points on [a, b] minus one.
long integer_length(Pt a, Pt b);

long width_in_direction(const std::vector<Pt>& pts, Dir u);

struct WidthResult {
  long width = 0;
  Dir witness;
};

// Minimal lattice width over all primitive directions, with an attaining
// direction. Gauss reduction provides an upper bound; a complete enumeration
// of the narrow box certifies the minimum and picks the witness.
WidthResult minimal_lattice_width(const std::vector<Pt>& pts);

// All canonical primitive u with width_in_direction < m, sorted by the
// deterministic direction key (|u.y|, u.x, u.y < 0). Requires a 2D hull.
std::vector<std::pair<Dir, long>> narrow_directions(const std::vector<Pt>& pts,
                                                         long m);

struct ThickResult {
  bool thick = true;
  std::optional<Dir> witness;  // a violating direction, when one exists
};

// Empty sets are m-thick; a 1D set needs integer length >= m; a 2D set needs,
// for every direction u of width m - a with a > 0, two hull sides
// perpendicular to u of integer length >= a. A single point fails for m >= 1.
ThickResult is_m_thick(const std::vector<Pt>& pts, long m);

long defect(const std::vector<Pt>& pts, Dir u, long m);

struct DefectFunctional {
  Rat f1, f2;
};

// f1 = area + sum def_u^2 / 2, f2 = 2 area + sum def_u^2 / 2, summing over
// canonical primitive directions. Requires an m-thick 2D input.
DefectFunctional defect_functional(const std::vector<Pt>& pts, long m);

struct WidthAreaResult {
  long width = 0;
  Rat area;
  Rat bound;
  bool pass = true;
};

// Width-area inequality: area >= 3k^2/2 for width 2k, and
// area >= (3k^2+3k+1)/2 for width 2k+1.
WidthAreaResult width_area_check(const std::vector<Pt>& pts);

std::vector<Pt> lattice_points_in(const std::vector<Pt>& hull);

}  // namespace tropigon
