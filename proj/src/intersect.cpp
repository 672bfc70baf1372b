#include "tropigon/intersect.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace tropigon {

namespace {

int sgn_rat(const Rat& r) { return sgn(r); }

// a + b*xi with xi an infinitesimal > 0; ordered lexicographically.
struct Lex {
  Rat a, b;
  Lex operator-() const { return {-a, -b}; }
  Lex operator/(const Rat& d) const { return {a / d, b / d}; }
  int sign() const {
    int s = sgn(a);
    return s != 0 ? s : sgn(b);
  }
  bool operator==(const Lex&) const = default;
};

struct Piece {
  RatPt base;
  Pt dir;  // primitive
  bool bounded;
  Rat len;  // far end parameter when bounded
  long weight;
};

RatPt at_param(const Piece& p, const Rat& s) {
  return {p.base.x + s * Rat(p.dir.x), p.base.y + s * Rat(p.dir.y)};
}

std::vector<Piece> build_pieces(const TropicalCurve& c) {
  std::vector<Piece> out;
  for (const CurveEdge& e : c.edges) {
    const RatPt& p1 = c.verts[e.v1].pos;
    const RatPt& p2 = c.verts[e.v2].pos;
    Rat len = e.dir.x != 0 ? (p2.x - p1.x) / Rat(e.dir.x) : (p2.y - p1.y) / Rat(e.dir.y);
    if (len <= 0) throw std::logic_error("build_pieces: bad edge orientation");
    out.push_back({p1, e.dir, true, len, e.weight});
  }
  for (const CurveRay& r : c.rays) out.push_back({c.verts[r.v].pos, r.dir, false, 0, r.weight});
  return out;
}

Rat rcross(const RatPt& u, const RatPt& v) { return u.x * v.y - u.y * v.x; }

bool on_segment(const RatPt& p, const RatPt& a, const RatPt& b) {
  RatPt ab{b.x - a.x, b.y - a.y};
  RatPt ap{p.x - a.x, p.y - a.y};
  if (rcross(ab, ap) != 0) return false;
  Rat dd = ab.x * ab.x + ab.y * ab.y;
  if (dd == 0) return ap.x == 0 && ap.y == 0;
  Rat t = ab.x * ap.x + ab.y * ap.y;
  return t >= 0 && t <= dd;
}

// Membership in an object; b_inf objects extend past b without bound.
bool on_object(const RatPt& p, const StableResult::Object& o) {
  if (!o.b_inf) return on_segment(p, o.a, o.b);
  RatPt ab{o.b.x - o.a.x, o.b.y - o.a.y};
  RatPt ap{p.x - o.a.x, p.y - o.a.y};
  return rcross(ab, ap) == 0 && ab.x * ap.x + ab.y * ap.y >= 0;
}

// Touch test on the truncated segments: every other object's coordinates lie
// strictly inside the truncation radius, so the cut-off tail is irrelevant.
bool objects_touch(const StableResult::Object& u, const StableResult::Object& v) {
  auto orient = [](const RatPt& a, const RatPt& b, const RatPt& c) {
    return sgn_rat((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
  };
  int o1 = orient(u.a, u.b, v.a), o2 = orient(u.a, u.b, v.b);
  int o3 = orient(v.a, v.b, u.a), o4 = orient(v.a, v.b, u.b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment(v.a, u.a, u.b)) return true;
  if (o2 == 0 && on_segment(v.b, u.a, u.b)) return true;
  if (o3 == 0 && on_segment(u.a, v.a, v.b)) return true;
  if (o4 == 0 && on_segment(u.b, v.a, v.b)) return true;
  return false;
}

struct IntervalEnd {
  bool inf = false;
  Rat v;
};

}  // namespace

int StableResult::component_of(const RatPt& p) const {
  for (const Object& o : objects)
    if (on_object(p, o)) return o.component;
  return -1;
}

long StableResult::local_total(const RatPt& p) const {
  int c = component_of(p);
  if (c < 0) return 0;
  long s = 0;
  for (const WeightedPoint& w : points)
    if (w.component == c) s += w.mult;
  return s;
}

StableResult stable_intersection(const TropicalCurve& A, const TropicalCurve& B,
                                 std::optional<RatPt> v) {
  auto pa = build_pieces(A);
  auto pb = build_pieces(B);
  bool symbolic = !v.has_value();
  // Perturbation vector as a Lex pair: symbolic v = (1, xi).
  Lex vx = symbolic ? Lex{Rat(1), Rat(0)} : Lex{v->x, Rat(0)};
  Lex vy = symbolic ? Lex{Rat(0), Rat(1)} : Lex{v->y, Rat(0)};
  if (!symbolic && v->x == 0 && v->y == 0)
    throw GenericityError("perturbation vector is zero");

  struct Limit {
    RatPt p;
    long mult;
  };
  std::vector<Limit> limits;
  std::vector<StableResult::Object> raw;

  for (const Piece& a : pa) {
    for (const Piece& b : pb) {
      long D = cross(a.dir, b.dir);
      RatPt delta{b.base.x - a.base.x, b.base.y - a.base.y};
      if (D != 0) {
        Rat sa0 = (delta.x * Rat(b.dir.y) - delta.y * Rat(b.dir.x)) / Rat(D);
        Rat sb0 = (delta.x * Rat(a.dir.y) - delta.y * Rat(a.dir.x)) / Rat(D);
        // cross(v, d) = vx*dy - vy*dx; s(t) = s0 - cross(v, d)/D * t.
        Lex sa1 = -Lex{vx.a * Rat(b.dir.y) - vy.a * Rat(b.dir.x),
                       vx.b * Rat(b.dir.y) - vy.b * Rat(b.dir.x)} /
                  Rat(D);
        Lex sb1 = -Lex{vx.a * Rat(a.dir.y) - vy.a * Rat(a.dir.x),
                       vx.b * Rat(a.dir.y) - vy.b * Rat(a.dir.x)} /
                  Rat(D);
        if (!symbolic) {
          bool a_end = sa0 == 0 || (a.bounded && sa0 == a.len);
          bool b_end = sb0 == 0 || (b.bounded && sb0 == b.len);
          if ((a_end && sa1.sign() == 0) || (b_end && sb1.sign() == 0))
            throw GenericityError("perturbation vector hits a vertex for all t");
        }
        auto inside = [](const Rat& s0, const Lex& s1, bool bounded, const Rat& len) {
          bool lo = s0 > 0 || (s0 == 0 && s1.sign() > 0);
          bool hi = !bounded || s0 < len || (s0 == len && s1.sign() < 0);
          return lo && hi;
        };
        // Membership at t = 0 (closed) for the intersection objects.
        bool on_a0 = sa0 >= 0 && (!a.bounded || sa0 <= a.len);
        bool on_b0 = sb0 >= 0 && (!b.bounded || sb0 <= b.len);
        if (on_a0 && on_b0) {
          RatPt p = at_param(a, sa0);
          raw.push_back({p, p, -1});
        }
        if (inside(sa0, sa1, a.bounded, a.len) && inside(sb0, sb1, b.bounded, b.len)) {
          long mult = a.weight * b.weight * std::abs(D);
          limits.push_back({at_param(a, sa0), mult});
        }
      } else {
        // Parallel pieces: no stable contribution, but collinear overlaps
        // form intersection objects at t = 0.
        Rat coll = Rat(a.dir.x) * delta.y - Rat(a.dir.y) * delta.x;
        if (coll != 0) continue;
        Rat dd = Rat(dot(a.dir, a.dir));
        Rat tau = (Rat(a.dir.x) * delta.x + Rat(a.dir.y) * delta.y) / dd;
        int sigma = b.dir == a.dir ? 1 : (b.dir == -a.dir ? -1 : 0);
        if (sigma == 0) throw std::logic_error("parallel primitive dirs disagree");
        IntervalEnd alo{false, Rat(0)}, ahi{!a.bounded, a.len};
        IntervalEnd blo, bhi;
        if (b.bounded) {
          Rat t2 = tau + Rat(sigma) * b.len;
          blo = {false, std::min(tau, t2)};
          bhi = {false, std::max(tau, t2)};
        } else if (sigma > 0) {
          blo = {false, tau};
          bhi = {true, Rat(0)};
        } else {
          blo = {true, Rat(0)};
          bhi = {false, tau};
        }
        IntervalEnd lo = (!blo.inf && (alo.inf || blo.v > alo.v)) ? blo : alo;
        IntervalEnd hi = (!bhi.inf && (ahi.inf || bhi.v < ahi.v)) ? bhi : ahi;
        if (lo.inf) throw std::logic_error("overlap with infinite lower end");
        if (!hi.inf && hi.v < lo.v) continue;
        if (!symbolic) {
          Rat cv = Rat(a.dir.x) * vy.a - Rat(a.dir.y) * vx.a;
          if (cv == 0) throw GenericityError("perturbation parallel to an overlap");
        }
        StableResult::Object o;
        o.a = at_param(a, lo.v);
        o.component = -1;
        if (hi.inf) {
          o.b = at_param(a, lo.v + 1);  // truncated below to clear all finite coords
          o.b_inf = true;
        } else {
          o.b = at_param(a, hi.v);
        }
        raw.push_back(o);
      }
    }
  }

  // Stretch truncated infinite overlaps beyond every finite coordinate, so
  // the segment-based touch tests see everything they can ever touch.
  Rat big(1);
  for (const auto& o : raw) {
    for (const Rat& c : {o.a.x, o.a.y, o.b.x, o.b.y}) {
      Rat m = abs(c);
      if (m > big) big = m;
    }
  }
  for (const auto& l : limits) {
    for (const Rat& c : {l.p.x, l.p.y}) {
      Rat m = abs(c);
      if (m > big) big = m;
    }
  }
  big = 2 * big + 2;
  for (auto& o : raw) {
    if (!o.b_inf) continue;
    RatPt d{o.b.x - o.a.x, o.b.y - o.a.y};
    o.b = {o.a.x + big * d.x, o.a.y + big * d.y};
  }

  // Deterministic object order, then union-find on touching objects.
  for (auto& o : raw)
    if (!o.b_inf && !(o.a < o.b) && !(o.a == o.b)) std::swap(o.a, o.b);
  std::sort(raw.begin(), raw.end(), [](const auto& u, const auto& w) {
    if (!(u.a == w.a)) return u.a < w.a;
    if (!(u.b == w.b)) return u.b < w.b;
    return u.b_inf < w.b_inf;
  });
  raw.erase(std::unique(raw.begin(), raw.end(),
                        [](const auto& u, const auto& w) {
                          return u.a == w.a && u.b == w.b && u.b_inf == w.b_inf;
                        }),
            raw.end());

  std::vector<int> parent(raw.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < raw.size(); i++)
    for (size_t j = i + 1; j < raw.size(); j++)
      if (find(i) != find(j) && objects_touch(raw[i], raw[j]))
        parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
  std::map<int, int> comp_id;
  for (size_t i = 0; i < raw.size(); i++) {
    int r = find(static_cast<int>(i));
    auto [it, fresh] = comp_id.try_emplace(r, static_cast<int>(comp_id.size()));
    raw[i].component = it->second;
  }

  StableResult res;
  res.objects = std::move(raw);
  std::map<RatPt, long> merged;
  for (const Limit& l : limits) merged[l.p] += l.mult;
  for (const auto& [p, mult] : merged) {
    int c = res.component_of(p);
    if (c < 0) throw std::logic_error("stable point outside the t=0 intersection");
    res.points.push_back({p, mult, c});
    res.total += mult;
  }
  return res;
}

long local_stable_intersection(const TropicalCurve& A, const TropicalCurve& B,
                                    const RatPt& P) {
  return stable_intersection(A, B).local_total(P);
}

TropicalCurve tropical_line(const RatPt& v, const Mat2& psi) {
  if (psi.det() != 1 && psi.det() != -1)
    throw std::domain_error("tropical_line: matrix is not unimodular");
  TropicalCurve c;
  c.verts.push_back({v, -1});
  for (Pt d : {Pt{-1, 0}, Pt{0, -1}, Pt{1, 1}})
    c.rays.push_back({0, psi.apply(d), 1, -1});
  return c;
}

MultCheckResult tropical_multiplicity_check(const TropicalCurve& C, const RatPt& P,
                                            long m, long bound) {
  if (bound < 1) throw std::domain_error("tropical_multiplicity_check: bound must be >= 1");
  struct Cls {
    Mat2 psi;
    std::array<Pt, 3> dirs;
  };
  std::vector<Cls> classes;
  std::set<std::vector<Pt>> seen;
  for (long a = -bound; a <= bound; a++)
    for (long b = -bound; b <= bound; b++)
      for (long c = -bound; c <= bound; c++)
        for (long d = -bound; d <= bound; d++) {
          if (a * d - b * c != 1) continue;
          Mat2 psi{a, b, c, d};
          std::array<Pt, 3> dirs{psi.apply({-1, 0}), psi.apply({0, -1}), psi.apply({1, 1})};
          std::vector<Pt> key(dirs.begin(), dirs.end());
          std::sort(key.begin(), key.end());
          if (seen.insert(key).second) classes.push_back({psi, dirs});
        }

  auto cpieces = build_pieces(C);
  MultCheckResult res;
  for (const Cls& cls : classes) {
    for (int fam = 0; fam < 3; fam++) {
      Pt di = cls.dirs[fam];
      std::set<Rat> crits;
      for (const Piece& q : cpieces) {
        long cq = cross(q.dir, di);
        Rat num = Rat(q.dir.x) * (P.y - q.base.y) - Rat(q.dir.y) * (P.x - q.base.x);
        if (cq != 0) {
          Rat s = num / Rat(cq);
          if (s > 0) crits.insert(s);
        } else if (num == 0) {
          // Slide along the piece's own line: entry/exit of the endpoints.
          Rat dd = Rat(dot(q.dir, q.dir));
          Rat tau0 = (Rat(q.dir.x) * (P.x - q.base.x) + Rat(q.dir.y) * (P.y - q.base.y)) / dd;
          Rat slope = Rat(-dot(q.dir, di)) / dd;
          Rat s0 = -tau0 / slope;
          if (s0 > 0) crits.insert(s0);
          if (q.bounded) {
            Rat s1 = (q.len - tau0) / slope;
            if (s1 > 0) crits.insert(s1);
          }
        }
      }
      for (const CurveVertex& w : C.verts) {
        for (int j = 0; j < 3; j++) {
          Pt dj = cls.dirs[j];
          long cj = cross(dj, di);
          Rat num = Rat(dj.x) * (w.pos.y - P.y) - Rat(dj.y) * (w.pos.x - P.x);
          if (cj != 0) {
            Rat s = -num / Rat(cj);
            if (s > 0) crits.insert(s);
          } else if (num == 0) {
            Rat dd = Rat(dot(dj, dj));
            Rat r0 = (Rat(dj.x) * (w.pos.x - P.x) + Rat(dj.y) * (w.pos.y - P.y)) / dd;
            Rat slope = Rat(dot(dj, di)) / dd;
            Rat s = -r0 / slope;
            if (s > 0) crits.insert(s);
          }
        }
      }
      std::vector<Rat> samples{Rat(0)};
      Rat prev;
      bool has_prev = false;
      for (const Rat& s : crits) {
        if (has_prev)
          samples.push_back((prev + s) / 2);
        else if (s > 0)
          samples.push_back(s / 2);
        samples.push_back(s);
        prev = s;
        has_prev = true;
      }
      samples.push_back(has_prev ? prev + 1 : Rat(1));

      for (const Rat& s : samples) {
        RatPt v{P.x - s * Rat(di.x), P.y - s * Rat(di.y)};
        TropicalCurve L = tropical_line(v, cls.psi);
        long local = local_stable_intersection(C, L, P);
        res.positions_checked++;
        if (local < m) {
          res.pass = false;
          res.violations.push_back({cls.psi, v, local});
          break;
        }
      }
    }
  }
  return res;
}

}  // namespace tropigon
