#include "tropigon/singular.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tropigon {

namespace {

Rat rdot(Pt u, const RatPt& p) { return Rat(u.x) * p.x + Rat(u.y) * p.y; }

std::string pt_str(Pt p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string dir_str(Dir d) {
  return "(" + std::to_string(d.x) + "," + std::to_string(d.y) + ")";
}

Rat cell_area(const SubCell& c) { return Rat(area2(c.poly)) / 2; }

}  // namespace

std::vector<Pt> support_at_least(const LiftedSupport& ls, const Rat& mu) {
  std::vector<Pt> out;
  for (const auto& [p, h] : ls.entries())
    if (h >= mu) out.push_back(p);
  return out;
}

ThicknessSweep thickness_sweep(const LiftedSupport& ls, long m) {
  std::set<Rat> levels;
  for (const auto& [p, h] : ls.entries()) levels.insert(h);
  ThicknessSweep sw;
  for (const Rat& mu : levels) {
    sw.levels_checked++;
    auto res = is_m_thick(support_at_least(ls, mu), m);
    if (!res.thick) {
      sw.pass = false;
      sw.failures.push_back({mu, res.witness});
    }
  }
  return sw;
}

std::vector<int> dep_edges(const Subdivision& sub, const LiftedSupport& ls, RatPt Q) {
  std::vector<int> out;
  for (size_t k = 0; k < sub.edges.size(); k++) {
    const SubEdge& e = sub.edges[k];
    if (*ls.height(e.a) + rdot(e.a, Q) == *ls.height(e.b) + rdot(e.b, Q))
      out.push_back(static_cast<int>(k));
  }
  return out;
}

InflResult influence(const Subdivision& sub, const LiftedSupport& ls, RatPt Q) {
  InflResult r;
  r.edges = dep_edges(sub, ls, Q);
  std::set<int> cells;
  for (int k : r.edges) {
    cells.insert(sub.edges[k].c1);
    if (sub.edges[k].c2 >= 0) cells.insert(sub.edges[k].c2);
  }
  r.cells.assign(cells.begin(), cells.end());
  r.star = 0;
  for (int k : r.cells) r.star += cell_area(sub.cells[k]);
  r.infl = r.star;
  for (const SubCell& c : sub.cells)
    if (c.dual() == Q) {
      r.vertex_case = true;
      r.infl += cell_area(c);
      break;
    }
  return r;
}

bool is_admissible(const std::vector<Pt>& support, long m) {
  return minimal_lattice_width(support).width >= m;
}

PairsResult complementary_pairs_check(const TropicalCurve& c, const Subdivision& sub,
                                      RatPt P, long m) {
  struct Item {
    std::string desc;
    long coord;  // dot(dir, dual edge) in the dual plane
    long weight;
    bool has_pos, has_neg;
  };
  std::map<Dir, std::vector<Item>> lines;

  auto dual_coord = [&](Dir u, int subedge) {
    const SubEdge& e = sub.edges[subedge];
    long ca = dot(u.pt(), e.a), cb = dot(u.pt(), e.b);
    if (ca != cb) throw std::logic_error("complementary_pairs: dual edge not constant");
    return ca;
  };

  for (size_t k = 0; k < c.edges.size(); k++) {
    const CurveEdge& e = c.edges[k];
    Dir u = canonical_dir(e.dir.x, e.dir.y);
    const RatPt& p1 = c.verts[e.v1].pos;
    const RatPt& p2 = c.verts[e.v2].pos;
    // On the line through P?
    if (Rat(u.x) * (p1.y - P.y) != Rat(u.y) * (p1.x - P.x)) continue;
    Rat s1 = rdot(u.pt(), p1) - rdot(u.pt(), P);
    Rat s2 = rdot(u.pt(), p2) - rdot(u.pt(), P);
    if (s1 > s2) std::swap(s1, s2);
    Item it;
    it.desc = "edge v" + std::to_string(e.v1) + "-v" + std::to_string(e.v2);
    it.coord = dual_coord(u, e.subedge);
    it.weight = e.weight;
    it.has_pos = s2 > 0;
    it.has_neg = s1 < 0;
    lines[u].push_back(it);
  }
  for (size_t k = 0; k < c.rays.size(); k++) {
    const CurveRay& r = c.rays[k];
    Dir u = canonical_dir(r.dir.x, r.dir.y);
    const RatPt& p = c.verts[r.v].pos;
    if (Rat(u.x) * (p.y - P.y) != Rat(u.y) * (p.x - P.x)) continue;
    Rat s = rdot(u.pt(), p) - rdot(u.pt(), P);
    bool positive_ray = r.dir == u.pt();
    Item it;
    it.desc = "ray v" + std::to_string(r.v) + " dir " + pt_str(r.dir);
    it.coord = dual_coord(u, r.subedge);
    it.weight = r.weight;
    it.has_pos = positive_ray || s > 0;
    it.has_neg = !positive_ray || s < 0;
    lines[u].push_back(it);
  }

  PairsResult res;
  for (const auto& [u, items] : lines) {
    for (size_t i = 0; i < items.size(); i++)
      for (size_t j = i; j < items.size(); j++) {
        const Item& a = items[i];
        const Item& b = items[j];
        bool qualify = i == j ? (a.has_pos && a.has_neg)
                              : ((a.has_pos && b.has_neg) || (a.has_neg && b.has_pos));
        if (!qualify) continue;
        PairRow row;
        row.dir = u;
        row.e1 = a.desc;
        row.e2 = b.desc;
        row.distance = std::abs(a.coord - b.coord);
        row.max_weight = std::max(a.weight, b.weight);
        row.pass = row.distance + row.max_weight >= m;
        if (!row.pass) res.pass = false;
        res.rows.push_back(row);
      }
  }
  return res;
}

namespace {

// Extended gcd: returns (a, b) with a u.x + b u.y == 1 for primitive u.
std::pair<long, long> bezout(Dir u) {
  long old_r = u.x, r = u.y;
  long old_s = 1, s = 0;
  long old_t = 0, t = 1;
  while (r != 0) {
    long q = old_r / r;
    std::tie(old_r, r) = std::pair(r, old_r - q * r);
    std::tie(old_s, s) = std::pair(s, old_s - q * s);
    std::tie(old_t, t) = std::pair(t, old_t - q * t);
  }
  if (old_r == -1) {
    old_r = 1;
    old_s = -old_s;
    old_t = -old_t;
  }
  if (old_r != 1) throw std::domain_error("bezout: direction not primitive");
  return {old_s, old_t};
}

}  // namespace

GHatResult g_hat_condition(const LiftedSupport& ls, RatPt P, Dir u, long m) {
  auto [a, b] = bezout(u);
  // Curve map R sends u to (1,0); support transforms by S = R^{-T}.
  Mat2 S{u.x, u.y, -b, a};
  if (S.det() != 1) throw std::logic_error("g_hat_condition: bad rotation");
  RatPt Pr{Rat(a) * P.x + Rat(b) * P.y, Rat(-u.y) * P.x + Rat(u.x) * P.y};

  LiftedSupport tls = transform(ls, S);
  Subdivision sub = lift_and_subdivide(tls);
  if (sub.dim != 2) throw std::domain_error("g_hat_condition: degenerate support");
  TropicalCurve curve = dual_curve(sub);

  std::vector<LongEdge> longs = maximal_long_edges(curve);
  const LongEdge* le = nullptr;
  for (const LongEdge& cand : longs) {
    if (cand.dir != Dir{1, 0}) continue;
    if (long_edge_contains(cand, Pr)) {
      le = &cand;
      break;
    }
  }
  if (!le)
    throw std::domain_error("g_hat_condition: no long edge of that direction through P");

  GProfile g = g_profile(tls);
  GHatResult res;
  res.dir = u;

  auto push_row = [&](const Rat& x, long mult) {
    GHatRow row{x, mult, g_hat(g, x), false};
    row.pass = Rat(mult) + row.ghat >= Rat(m);
    if (!row.pass) res.pass = false;
    res.rows.push_back(row);
  };

  auto cell_extreme_x = [&](int vertex, bool leftmost) {
    const auto& poly = sub.cells[curve.verts[vertex].cell].poly;
    long x = poly[0].x;
    for (const Pt& q : poly) x = leftmost ? std::min(x, q.x) : std::max(x, q.x);
    return Rat(x);
  };

  // Finite left end: a zero-length row at the extreme column of the end cell.
  const LongPiece& first = le->pieces.front();
  if (!first.lo_inf) push_row(cell_extreme_x(first.vlo, true), 0);

  for (const LongPiece& piece : le->pieces) {
    int subedge = piece.is_ray ? curve.rays[piece.idx].subedge
                               : curve.edges[piece.idx].subedge;
    long w = piece.is_ray ? curve.rays[piece.idx].weight
                               : curve.edges[piece.idx].weight;
    const SubEdge& e = sub.edges[subedge];
    if (e.a.x != e.b.x)
      throw std::logic_error("g_hat_condition: dual edge not vertical");
    push_row(Rat(e.a.x), w);
  }

  const LongPiece& last = le->pieces.back();
  if (!last.hi_inf) push_row(cell_extreme_x(last.vhi, false), 0);

  for (size_t k = 0; k + 1 < res.rows.size(); k++)
    if (!(res.rows[k].x < res.rows[k + 1].x))
      throw std::logic_error("g_hat_condition: columns not increasing");

  res.span = res.rows.back().x - res.rows.front().x;
  res.span_pass = res.span >= Rat(m);
  if (!res.span_pass) res.pass = false;
  return res;
}

PreparationResult preparation_check(const TropicalCurve& c, const Subdivision& sub,
                                    RatPt P, Dir u, long m) {
  auto vi = c.vertex_at(P);
  if (!vi) throw std::domain_error("preparation_check: P is not a curve vertex");
  std::vector<LongEdge> longs = maximal_long_edges(c);
  const LongEdge* le = nullptr;
  for (const LongEdge& cand : longs) {
    if (cand.dir != canonical_dir(u.x, u.y)) continue;
    if (long_edge_contains(cand, P)) {
      le = &cand;
      break;
    }
  }
  if (!le)
    throw std::domain_error("preparation_check: no long edge of that direction through P");
  std::set<int> vs;
  for (const LongPiece& piece : le->pieces) {
    if (piece.vlo >= 0) vs.insert(piece.vlo);
    if (piece.vhi >= 0) vs.insert(piece.vhi);
  }
  if (!vs.count(*vi)) throw std::logic_error("preparation_check: P not among edge vertices");
  PreparationResult res;
  res.sum = 0;
  for (int v : vs)
    if (v != *vi) res.sum += cell_area(sub.cells[c.verts[v].cell]);
  res.def = defect(sub.cells[c.verts[*vi].cell].poly, canonical_dir(u.x, u.y), m);
  res.bound = Rat(res.def * res.def) / 2;
  res.stated = Rat(res.def * res.def);
  res.pass = res.sum >= res.bound;
  return res;
}

namespace {

struct CertBuilder {
  Certificate cert;
  bool admissible = false;
  bool unconditional_fail = false;
  bool conditional_fail = false;

  void add(const std::string& name, bool pass, const std::string& value,
           const std::string& bound, const std::string& witness, bool unconditional) {
    cert.checks.push_back({name, pass ? "pass" : "fail", value, bound, witness});
    if (!pass) {
      if (unconditional)
        unconditional_fail = true;
      else
        conditional_fail = true;
    }
  }

  void na(const std::string& name, const std::string& witness) {
    cert.checks.push_back({name, "not-applicable", "", "", witness});
  }
};

}  // namespace

Certificate exertion_certificate(const LaurentPolynomial& f, RatPt P, long m) {
  if (m < 1) throw std::domain_error("exertion_certificate: m must be >= 1");
  if (f.is_zero()) throw std::domain_error("exertion_certificate: zero polynomial");
  LiftedSupport ls = LiftedSupport::from_polynomial(f);
  auto support = ls.points();

  CertBuilder cb;
  WidthResult wr = minimal_lattice_width(support);
  cb.admissible = wr.width >= m;
  cb.add("admissible_width", cb.admissible, std::to_string(wr.width), std::to_string(m),
         "minimum attained by " + dir_str(wr.witness), false);

  Classification cl = classify_point(ls, P.x, P.y);
  std::string kind = cl.kind == PointClass::Vertex
                         ? "vertex"
                         : (cl.kind == PointClass::EdgeInterior ? "edge-interior" : "region");
  cb.add("point_on_curve", cl.kind != PointClass::Region, kind, "vertex|edge-interior",
         cl.kind == PointClass::Region ? "unique maximum at " + pt_str(cl.argmax[0]) : "",
         true);

  ThicknessSweep sweep = thickness_sweep(ls, m);
  {
    std::string witness;
    if (!sweep.failures.empty()) {
      const auto& fl = sweep.failures.front();
      witness = "level " + rat_str(fl.level);
      if (fl.witness) witness += " direction " + dir_str(*fl.witness);
    }
    cb.add("thickness_sweep", sweep.pass, "levels=" + std::to_string(sweep.levels_checked),
           "m-thick at every level", witness, false);
  }

  Subdivision sub;
  bool have_sub = false;
  if (hull_dim(convex_hull(support)) == 2) {
    sub = lift_and_subdivide(ls);
    have_sub = true;
  }

  if (!have_sub || cl.kind == PointClass::Region) {
    std::string why = !have_sub ? "degenerate Newton polygon" : "point not on the curve";
    cb.na("influence_lower_bound", why);
    cb.na("complementary_pairs", why);
  } else {
    TropicalCurve curve = dual_curve(sub);
    InflResult infl = influence(sub, ls, P);
    Rat half_m2 = Rat(m * m) / 2;

    if (cl.kind == PointClass::EdgeInterior) {
      auto hull = convex_hull(cl.argmax);
      Pt A = hull[0], B = hull[1];
      int subedge = -1;
      for (size_t k = 0; k < sub.edges.size(); k++)
        if (sub.edges[k].a == A && sub.edges[k].b == B) subedge = static_cast<int>(k);
      if (subedge < 0) throw std::logic_error("certificate: dual edge not found");
      long len = integer_length(A, B);

      cb.add("influence_lower_bound", infl.infl >= half_m2, rat_str(infl.infl),
             rat_str(half_m2), "", false);
      cb.add("dual_edge_length", len >= m, std::to_string(len), std::to_string(m),
             len >= m ? ""
                      : "d(E) length " + std::to_string(len) + " < " + std::to_string(m),
             true);

      Dir u = canonical_dir(rot90cw(B - A).x, rot90cw(B - A).y);
      GHatResult gh = g_hat_condition(ls, P, u, m);
      std::string witness;
      for (const GHatRow& row : gh.rows)
        if (!row.pass) {
          witness = "x=" + rat_str(row.x) + " mult " + std::to_string(row.mult) +
                    " + g_hat " + rat_str(row.ghat) + " < " + std::to_string(m);
          break;
        }
      cb.add("g_hat" + dir_str(u), witness.empty(), "rows=" + std::to_string(gh.rows.size()),
             "mult + g_hat >= " + std::to_string(m), witness, false);
      cb.add("long_edge_span" + dir_str(u), gh.span_pass, rat_str(gh.span),
             std::to_string(m), "", false);
    } else {
      Rat bound38 = Rat(3 * m * m) / 8;
      cb.add("star_influence_lower_bound", infl.star >= bound38, rat_str(infl.star),
             rat_str(bound38), "", false);
      cb.add("influence_lower_bound", infl.infl >= half_m2, rat_str(infl.infl),
             rat_str(half_m2), "", false);
    }

    PairsResult pairs = complementary_pairs_check(curve, sub, P, m);
    std::string witness;
    for (const PairRow& row : pairs.rows)
      if (!row.pass) {
        witness = row.e1 + " / " + row.e2 + ": " + std::to_string(row.distance) + " + " +
                  std::to_string(row.max_weight) + " < " + std::to_string(m);
        break;
      }
    cb.add("complementary_pairs", pairs.pass, "pairs=" + std::to_string(pairs.rows.size()),
           "distance + max weight >= " + std::to_string(m), witness, false);

    if (cl.kind == PointClass::Vertex) {
      for (const LongEdge& le : maximal_long_edges(curve)) {
        if (!long_edge_contains(le, P)) continue;
        GHatResult gh = g_hat_condition(ls, P, le.dir, m);
        std::string w2;
        for (const GHatRow& row : gh.rows)
          if (!row.pass) {
            w2 = "x=" + rat_str(row.x) + " mult " + std::to_string(row.mult) + " + g_hat " +
                 rat_str(row.ghat) + " < " + std::to_string(m);
            break;
          }
        cb.add("g_hat" + dir_str(le.dir), w2.empty(), "rows=" + std::to_string(gh.rows.size()),
               "mult + g_hat >= " + std::to_string(m), w2, false);
        cb.add("long_edge_span" + dir_str(le.dir), gh.span_pass, rat_str(gh.span),
               std::to_string(m), "", false);
      }
    }
  }

  cb.cert.admissible = cb.admissible;
  cb.cert.kind = cl.kind;
  if (cb.unconditional_fail)
    cb.cert.verdict = "refuted";
  else if (!cb.admissible)
    cb.cert.verdict = "inconclusive: inadmissible";
  else if (cb.conditional_fail)
    cb.cert.verdict = "refuted";
  else
    cb.cert.verdict = "consistent";
  return cb.cert;
}

}  // namespace tropigon
