#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "tropigon/curve.hpp"

namespace tropigon {

struct WeightedPoint {
  RatPt point;
  long mult;
  int component;  // component of A cap B the stable point converges into
};

struct StableResult {
  std::vector<WeightedPoint> points;  // sorted by (x, y)
  long total = 0;

  // Index of the component of A cap B containing p, -1 if p is not in it.
  int component_of(const RatPt& p) const;
  long local_total(const RatPt& p) const;

  // Connected components of A cap B at t = 0: points and overlap segments.
  struct Object {
    RatPt a, b;  // a == b for a point; b_inf: ray from a through b
    int component = -1;
    bool b_inf = false;
  };
  std::vector<Object> objects;
};

struct GenericityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Stable intersection: shift A by t*v for an infinitesimal t > 0 and take the
// limits of the transversal intersection points. By default v = (1, xi) with
// xi a positive infinitesimal, which is generic for every input; an explicit
// rational v throws GenericityError when it fails to separate some pair.
StableResult stable_intersection(const TropicalCurve& A, const TropicalCurve& B,
                                 std::optional<RatPt> v = std::nullopt);

long local_stable_intersection(const TropicalCurve& A, const TropicalCurve& B,
                                    const RatPt& P);

// Standard trivalent line with vertex at v: rays (-1,0), (0,-1), (1,1),
// optionally remapped by a unimodular matrix (applied to the directions).
TropicalCurve tropical_line(const RatPt& v, const Mat2& psi = Mat2{});

struct MultViolation {
  Mat2 psi;
  RatPt vertex;  // line position
  long local;
};

struct MultCheckResult {
  bool pass = true;
  long positions_checked = 0;
  std::vector<MultViolation> violations;
};

// For every unimodular psi with |entries| <= bound (deduplicated by ray
// direction set) and every combinatorial position of the psi-image of the
// standard line through P, the local stable intersection along the component
// containing P must be >= m. Pass is an incomplete certificate; any violation
// refutes m-foldness.
MultCheckResult tropical_multiplicity_check(const TropicalCurve& C, const RatPt& P,
                                            long m, long bound);

}  // namespace tropigon
