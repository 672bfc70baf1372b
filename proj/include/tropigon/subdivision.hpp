#pragma once

#include <optional>
#include <vector>

#include "tropigon/laurent.hpp"
#include "tropigon/lattice.hpp"

namespace tropigon {

// Support points with rational heights h(i,j) = val(a_ij) under
// val(sum c_a t^a) = -min{a : c_a != 0}.
class LiftedSupport {
 public:
  static LiftedSupport from_polynomial(const LaurentPolynomial& f);

  void add(Pt p, const Rat& h);
  const std::vector<std::pair<Pt, Rat>>& entries() const { return entries_; }
  std::vector<Pt> points() const;
  std::optional<Rat> height(Pt p) const;
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::pair<Pt, Rat>> entries_;  // sorted by point, unique
};

LiftedSupport transform(const LiftedSupport& ls, const Mat2& m);

struct RatPt {
  Rat x, y;
  bool operator==(const RatPt&) const = default;
  bool operator<(const RatPt& o) const { return x < o.x || (x == o.x && y < o.y); }
};

struct SubCell {
  std::vector<Pt> poly;      // CCW hull of the cell
  std::vector<Pt> support;   // all lifted points on the cell's plane, sorted
  Rat alpha, beta, gamma;    // plane z = alpha x + beta y + gamma
  RatPt dual() const { return {-alpha, -beta}; }
};

struct SubEdge {
  Pt a, b;      // a < b
  int c1 = -1;  // incident cell indices; c2 == -1 on the Newton boundary
  int c2 = -1;
};

// Regular subdivision of the Newton polygon induced by the heights: the
// projections of the upper facets of conv{(i, j, h(i,j))}.
struct Subdivision {
  std::vector<Pt> newton;  // CCW hull of the support
  std::vector<SubCell> cells;
  std::vector<SubEdge> edges;
  int dim = -1;  // hull_dim(newton)
};

Subdivision lift_and_subdivide(const LiftedSupport& ls);

struct TropicalEval {
  Rat value;
  std::vector<Pt> argmax;  // sorted
};

// max over the support of h(i,j) + i X + j Y.
TropicalEval eval_tropical(const LiftedSupport& ls, const Rat& X, const Rat& Y);

enum class PointClass { Region, EdgeInterior, Vertex };

struct Classification {
  PointClass kind = PointClass::Region;
  std::vector<Pt> argmax;
  Rat value;
};

Classification classify_point(const LiftedSupport& ls, const Rat& X, const Rat& Y);

}  // namespace tropigon
