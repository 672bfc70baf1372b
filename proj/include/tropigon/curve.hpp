#pragma once

#include <optional>
#include <vector>

#include "tropigon/subdivision.hpp"

namespace tropigon {

struct CurveVertex {
  RatPt pos;
  int cell;  // dual subdivision cell
};

struct CurveEdge {
  int v1, v2;
  Pt dir;            // primitive, oriented v1 -> v2
  long weight;  // integer length of the dual subdivision edge
  int subedge;
};

struct CurveRay {
  int v;
  Pt dir;  // primitive outward normal of the dual Newton boundary edge
  long weight;
  int subedge;
};

// Dual tropical curve of a 2D regular subdivision: one vertex per cell at
// (-alpha, -beta), one bounded edge per interior subdivision edge, one ray
// per Newton-boundary subdivision edge. Balancing holds at every vertex.
struct TropicalCurve {
  std::vector<CurveVertex> verts;
  std::vector<CurveEdge> edges;
  std::vector<CurveRay> rays;

  std::optional<int> vertex_at(const RatPt& p) const;
};

TropicalCurve dual_curve(const Subdivision& sub);

// A maximal union of consecutive collinear pieces (edges and rays) of the
// curve, ordered by increasing parameter dot(dir, pos).
struct LongPiece {
  bool is_ray;
  int idx;
  bool lo_inf, hi_inf;
  Rat lo, hi;        // parameter interval along the line
  int vlo, vhi;      // vertex ids at finite ends, -1 at infinite ends
};

struct LongEdge {
  Dir dir;
  Rat offset;  // cross(dir, p) for points p on the line
  std::vector<LongPiece> pieces;
};

std::vector<LongEdge> maximal_long_edges(const TropicalCurve& c);

bool long_edge_contains(const LongEdge& le, const RatPt& p);

// Does the point lie on the curve (any edge, ray, or vertex)?
bool curve_contains(const TropicalCurve& c, const RatPt& p);

}  // namespace tropigon
