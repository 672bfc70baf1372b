#include "tropigon/curve.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tropigon {

std::optional<int> TropicalCurve::vertex_at(const RatPt& p) const {
  for (size_t k = 0; k < verts.size(); k++)
    if (verts[k].pos == p) return static_cast<int>(k);
  return std::nullopt;
}

namespace {

Rat rdot(Pt u, const RatPt& p) { return Rat(u.x) * p.x + Rat(u.y) * p.y; }
Rat rcross(Pt u, const RatPt& p) { return Rat(u.x) * p.y - Rat(u.y) * p.x; }

}  // namespace

TropicalCurve dual_curve(const Subdivision& sub) {
  if (sub.dim != 2) throw std::domain_error("dual_curve: degenerate Newton polygon");
  TropicalCurve c;
  for (size_t k = 0; k < sub.cells.size(); k++)
    c.verts.push_back({sub.cells[k].dual(), static_cast<int>(k)});

  for (size_t k = 0; k < sub.edges.size(); k++) {
    const SubEdge& e = sub.edges[k];
    long w = integer_length(e.a, e.b);
    Pt n = rot90cw(primitive(e.b - e.a));
    if (e.c2 >= 0) {
      const RatPt& p1 = c.verts[e.c1].pos;
      const RatPt& p2 = c.verts[e.c2].pos;
      Rat dx = p2.x - p1.x, dy = p2.y - p1.y;
      if (Rat(n.x) * dy != Rat(n.y) * dx)
        throw std::logic_error("dual_curve: edge not perpendicular to dual");
      if (Rat(n.x) * dx + Rat(n.y) * dy < 0) n = -n;
      c.edges.push_back({e.c1, e.c2, n, w, static_cast<int>(k)});
    } else {
      long hi = dot(n, sub.newton[0]);
      for (const Pt& q : sub.newton) hi = std::max(hi, dot(n, q));
      if (dot(n, e.a) != hi) n = -n;
      hi = dot(n, sub.newton[0]);
      for (const Pt& q : sub.newton) hi = std::max(hi, dot(n, q));
      if (dot(n, e.a) != hi || dot(n, e.b) != hi)
        throw std::logic_error("dual_curve: boundary edge not supporting");
      c.rays.push_back({e.c1, n, w, static_cast<int>(k)});
    }
  }

  // Balancing: weighted directions at each vertex sum to zero.
  std::vector<Pt> bal(c.verts.size(), Pt{0, 0});
  for (const CurveEdge& e : c.edges) {
    bal[e.v1] = bal[e.v1] + Pt{e.weight * e.dir.x, e.weight * e.dir.y};
    bal[e.v2] = bal[e.v2] - Pt{e.weight * e.dir.x, e.weight * e.dir.y};
  }
  for (const CurveRay& r : c.rays)
    bal[r.v] = bal[r.v] + Pt{r.weight * r.dir.x, r.weight * r.dir.y};
  for (const Pt& b : bal)
    if (b != Pt{0, 0}) throw std::logic_error("dual_curve: balancing violated");
  return c;
}

std::vector<LongEdge> maximal_long_edges(const TropicalCurve& c) {
  struct Key {
    Dir d;
    Rat off;
    bool operator<(const Key& o) const {
      if (d != o.d) return d < o.d;
      return off < o.off;
    }
  };
  std::map<Key, std::vector<LongPiece>> lines;

  for (size_t k = 0; k < c.edges.size(); k++) {
    const CurveEdge& e = c.edges[k];
    Dir dc = canonical_dir(e.dir.x, e.dir.y);
    const RatPt& p1 = c.verts[e.v1].pos;
    const RatPt& p2 = c.verts[e.v2].pos;
    Rat s1 = rdot(dc.pt(), p1), s2 = rdot(dc.pt(), p2);
    LongPiece lp{false, static_cast<int>(k), false, false, s1, s2, e.v1, e.v2};
    if (s1 > s2) {
      std::swap(lp.lo, lp.hi);
      std::swap(lp.vlo, lp.vhi);
    }
    lines[{dc, rcross(dc.pt(), p1)}].push_back(lp);
  }
  for (size_t k = 0; k < c.rays.size(); k++) {
    const CurveRay& r = c.rays[k];
    Dir dc = canonical_dir(r.dir.x, r.dir.y);
    const RatPt& p = c.verts[r.v].pos;
    Rat s = rdot(dc.pt(), p);
    LongPiece lp{true, static_cast<int>(k), false, false, s, s, r.v, r.v};
    if (r.dir == dc.pt()) {
      lp.hi_inf = true;
      lp.vhi = -1;
    } else {
      lp.lo_inf = true;
      lp.vlo = -1;
    }
    lines[{dc, rcross(dc.pt(), p)}].push_back(lp);
  }

  std::vector<LongEdge> out;
  for (auto& [key, items] : lines) {
    std::sort(items.begin(), items.end(), [](const LongPiece& a, const LongPiece& b) {
      if (a.lo_inf != b.lo_inf) return a.lo_inf;
      return a.lo < b.lo;
    });
    LongEdge cur{key.d, key.off, {}};
    for (const LongPiece& it : items) {
      bool chain = !cur.pieces.empty() && !cur.pieces.back().hi_inf && !it.lo_inf &&
                   cur.pieces.back().hi == it.lo;
      if (!cur.pieces.empty() && !chain) {
        out.push_back(cur);
        cur.pieces.clear();
      }
      cur.pieces.push_back(it);
    }
    if (!cur.pieces.empty()) out.push_back(cur);
  }
  return out;
}

bool long_edge_contains(const LongEdge& le, const RatPt& p) {
  if (rcross(le.dir.pt(), p) != le.offset) return false;
  Rat s = rdot(le.dir.pt(), p);
  for (const LongPiece& it : le.pieces) {
    bool lo_ok = it.lo_inf || s >= it.lo;
    bool hi_ok = it.hi_inf || s <= it.hi;
    if (lo_ok && hi_ok) return true;
  }
  return false;
}

bool curve_contains(const TropicalCurve& c, const RatPt& p) {
  for (const LongEdge& le : maximal_long_edges(c))
    if (long_edge_contains(le, p)) return true;
  return false;
}

}  // namespace tropigon
