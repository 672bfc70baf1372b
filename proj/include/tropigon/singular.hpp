#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropigon/curve.hpp"
#include "tropigon/profile.hpp"
#include "tropigon/subdivision.hpp"

namespace tropigon {

// Support points at height >= mu (heights are -val, so this is the sublevel
// support of the valuation), sorted.
std::vector<Pt> support_at_least(const LiftedSupport& ls, const Rat& mu);

struct ThicknessSweep {
  struct Failure {
    Rat level;
    std::optional<Dir> witness;
  };
  bool pass = true;
  long levels_checked = 0;
  std::vector<Failure> failures;
};

// m-thickness of every distinct sublevel support.
ThicknessSweep thickness_sweep(const LiftedSupport& ls, long m);

// Subdivision edges whose endpoint heights tie under the linear functional
// of Q: h(a) + a.Q == h(b) + b.Q. Boundary edges included.
std::vector<int> dep_edges(const Subdivision& sub, const LiftedSupport& ls, RatPt Q);

struct InflResult {
  Rat star;  // total area of cells incident to a dep edge
  Rat infl;  // star + area of the dual cell of Q when Q is a curve vertex
  std::vector<int> edges;
  std::vector<int> cells;
  bool vertex_case = false;
};

InflResult influence(const Subdivision& sub, const LiftedSupport& ls, RatPt Q);

// Minimal lattice width of the support is at least m.
bool is_admissible(const std::vector<Pt>& support, long m);

struct PairRow {
  Dir dir;               // direction of the line through P
  std::string e1, e2;    // descriptions of the paired pieces
  long distance;    // |u.(dual1) - u.(dual2)|
  long max_weight;
  bool pass;
};

struct PairsResult {
  bool pass = true;
  std::vector<PairRow> rows;
};

// For every line through P spanned by curve pieces: every pair of pieces
// with points on opposite sides of P (a piece spanning both sides pairs with
// everything on the line, itself included) must satisfy
// distance + max(weight) >= m.
PairsResult complementary_pairs_check(const TropicalCurve& c, const Subdivision& sub,
                                      RatPt P, long m);

struct GHatRow {
  Rat x;            // column of the dual edge in the rotated frame
  long mult;   // dual edge length (0 for the finite-end rows)
  Rat ghat;
  bool pass;
};

struct GHatResult {
  bool pass = true;
  std::vector<GHatRow> rows;
  Rat span;
  bool span_pass = true;
  Dir dir;
};

// Rotate so the long edge through P with direction u becomes horizontal;
// each dual edge of its pieces sits in an integer column x_i with length
// m_i, finite ends contribute zero-length rows at the extreme column of the
// end cell. Checks m_i + g_hat(x_i) >= m for every row and span >= m.
GHatResult g_hat_condition(const LiftedSupport& ls, RatPt P, Dir u, long m);

struct PreparationResult {
  Rat sum;        // total area of dual cells of the other long-edge vertices
  long def;  // max(m - width of d(P) in direction u, 0)
  Rat bound;      // def^2 / 2, the enforced bound
  Rat stated;     // def^2, reported only
  bool pass;
};

// P must be a curve vertex on a long edge of direction u.
PreparationResult preparation_check(const TropicalCurve& c, const Subdivision& sub,
                                    RatPt P, Dir u, long m);

struct CheckRow {
  std::string name;
  std::string status;  // "pass" | "fail" | "not-applicable"
  std::string value;
  std::string bound;
  std::string witness;
};

struct Certificate {
  std::string verdict;  // "consistent" | "refuted" | "inconclusive: inadmissible"
  std::vector<CheckRow> checks;
  bool admissible = false;
  PointClass kind = PointClass::Region;
};

// Every necessary condition for P being (the valuation image of) an m-fold
// point of the curve of f. The point_on_curve and dual_edge_length rows
// refute unconditionally; the remaining rows refute only when the support is
// admissible, otherwise the verdict stays "inconclusive: inadmissible".
Certificate exertion_certificate(const LaurentPolynomial& f, RatPt P, long m);

}  // namespace tropigon
