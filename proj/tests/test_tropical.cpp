#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "tropigon/curve.hpp"
#include "tropigon/laurent.hpp"
#include "tropigon/profile.hpp"
#include "tropigon/subdivision.hpp"

using namespace tropigon;

namespace {

const char* kPentagon =
    "t^-3*x*y^3 - (3t^-3+t^-2)*x*y^2 + (3t^-3+2t^-2-2t^-1)*x*y - "
    "(t^-3+t^-2-2t^-1-3t^2)*x + t^-2*x^2*y^2 - (2t^-2-t^-1)*x^2*y + "
    "(t^-2-t^-1-3t^2)*x^2 + t^-1*y - (t^-1+t^2) + t^2*x^3";

LiftedSupport random_support(std::mt19937& rng, int maxn = 10, int maxc = 6) {
  std::uniform_int_distribution<int> n(3, maxn), c(0, maxc), num(-5, 5), den(1, 3);
  LiftedSupport ls;
  std::set<std::pair<long, long>> seen;
  int k = n(rng);
  for (int i = 0; i < k; i++) {
    Pt p{c(rng), c(rng)};
    if (!seen.insert({p.x, p.y}).second) continue;
    ls.add(p, rat_ll(num(rng), den(rng)));
  }
  return ls;
}

// Oracle: a plane through three lifted points is an upper facet iff nothing
// lies strictly above it; cells are the maximal coplanar sets of such planes.
std::vector<SubCell> subdivide_brute(const LiftedSupport& ls) {
  const auto& e = ls.entries();
  std::map<std::array<Rat, 3>, SubCell> found;
  for (size_t i = 0; i < e.size(); i++)
    for (size_t j = i + 1; j < e.size(); j++)
      for (size_t k = j + 1; k < e.size(); k++) {
        Pt A = e[i].first, B = e[j].first, C = e[k].first;
        long D = cross(B - A, C - A);
        if (D == 0) continue;
        Rat z1 = e[j].second - e[i].second, z2 = e[k].second - e[i].second;
        Rat alpha = (z1 * Rat(C.y - A.y) - z2 * Rat(B.y - A.y)) / Rat(D);
        Rat beta = (z2 * Rat(B.x - A.x) - z1 * Rat(C.x - A.x)) / Rat(D);
        Rat gamma = e[i].second - alpha * Rat(A.x) - beta * Rat(A.y);
        bool upper = true;
        for (const auto& [p, h] : e)
          if (h > alpha * Rat(p.x) + beta * Rat(p.y) + gamma) {
            upper = false;
            break;
          }
        if (!upper) continue;
        SubCell cell;
        cell.alpha = alpha;
        cell.beta = beta;
        cell.gamma = gamma;
        for (const auto& [p, h] : e)
          if (h == alpha * Rat(p.x) + beta * Rat(p.y) + gamma) cell.support.push_back(p);
        cell.poly = convex_hull(cell.support);
        found.emplace(std::array<Rat, 3>{alpha, beta, gamma}, std::move(cell));
      }
  std::vector<SubCell> cells;
  for (auto& [key, cell] : found) cells.push_back(std::move(cell));
  std::sort(cells.begin(), cells.end(), [](const SubCell& u, const SubCell& v) {
    if (!(u.poly[0] == v.poly[0])) return u.poly[0] < v.poly[0];
    return u.poly[1] < v.poly[1];
  });
  return cells;
}

RatPt apply_rat(const Mat2& m, const RatPt& p) {
  return {Rat(m.a) * p.x + Rat(m.b) * p.y, Rat(m.c) * p.x + Rat(m.d) * p.y};
}

Mat2 random_unimodular(std::mt19937& rng, int steps = 6) {
  std::uniform_int_distribution<int> pick(0, 3);
  Mat2 m;
  for (int k = 0; k < steps; k++) {
    switch (pick(rng)) {
      case 0: m = m.mul(Mat2{1, 1, 0, 1}); break;
      case 1: m = m.mul(Mat2{1, 0, 1, 1}); break;
      case 2: m = m.mul(Mat2{0, -1, 1, 0}); break;
      default: m = m.mul(Mat2{1, -1, 0, 1}); break;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("pentagon example: cells, planes, duals, weights") {
  LaurentPolynomial f = parse_polynomial(kPentagon);
  LiftedSupport ls = LiftedSupport::from_polynomial(f);
  CHECK(*ls.height(Pt{1, 0}) == Rat(3));
  CHECK(*ls.height(Pt{2, 2}) == Rat(2));
  CHECK(*ls.height(Pt{3, 0}) == Rat(-2));
  CHECK(*ls.height(Pt{0, 0}) == Rat(1));

  Subdivision sub = lift_and_subdivide(ls);
  CHECK(sub.newton == std::vector<Pt>{{0, 0}, {3, 0}, {2, 2}, {1, 3}, {0, 1}});
  REQUIRE(sub.cells.size() == 3);
  CHECK(sub.cells[0].poly == std::vector<Pt>{{0, 0}, {1, 0}, {1, 3}, {0, 1}});
  CHECK(sub.cells[1].poly == std::vector<Pt>{{1, 0}, {2, 0}, {2, 2}, {1, 3}});
  CHECK(sub.cells[2].poly == std::vector<Pt>{{2, 0}, {3, 0}, {2, 2}});
  CHECK(area2(sub.cells[0].poly) == 4);
  CHECK(area2(sub.cells[1].poly) == 5);
  CHECK(area2(sub.cells[2].poly) == 2);
  CHECK(sub.cells[0].alpha == Rat(2));
  CHECK(sub.cells[0].beta == Rat(0));
  CHECK(sub.cells[0].gamma == Rat(1));
  CHECK(sub.cells[1].dual() == RatPt{Rat(1), Rat(0)});
  CHECK(sub.cells[2].dual() == RatPt{Rat(4), Rat(0)});

  TropicalCurve c = dual_curve(sub);
  REQUIRE(c.verts.size() == 3);
  CHECK(c.verts[0].pos == RatPt{Rat(-2), Rat(0)});
  CHECK(c.verts[1].pos == RatPt{Rat(1), Rat(0)});
  CHECK(c.verts[2].pos == RatPt{Rat(4), Rat(0)});
  REQUIRE(c.edges.size() == 2);
  CHECK(c.edges[0].weight == 3);
  CHECK(c.edges[1].weight == 2);
  CHECK(c.rays.size() == 7);
  std::multiset<std::pair<long, long>> dirs;
  for (const CurveRay& r : c.rays) dirs.insert({r.dir.x, r.dir.y});
  CHECK(dirs == std::multiset<std::pair<long, long>>{
                    {-2, 1}, {-1, 0}, {0, -1}, {0, -1}, {0, -1}, {1, 1}, {2, 1}});
}

TEST_CASE("subdivision equals the brute-force upper-facet oracle") {
  std::mt19937 rng(31);
  int checked = 0;
  for (int it = 0; it < 400 && checked < 250; it++) {
    LiftedSupport ls = random_support(rng);
    if (hull_dim(convex_hull(ls.points())) != 2) continue;
    Subdivision sub = lift_and_subdivide(ls);
    std::vector<SubCell> want = subdivide_brute(ls);
    REQUIRE(sub.cells.size() == want.size());
    for (size_t k = 0; k < want.size(); k++) {
      CHECK(sub.cells[k].poly == want[k].poly);
      CHECK(sub.cells[k].support == want[k].support);
      CHECK(sub.cells[k].alpha == want[k].alpha);
      CHECK(sub.cells[k].beta == want[k].beta);
      CHECK(sub.cells[k].gamma == want[k].gamma);
    }
    checked++;
  }
  CHECK(checked == 250);
}

TEST_CASE("subdivision tiles the polygon and edges link cells") {
  std::mt19937 rng(32);
  for (int it = 0; it < 200; it++) {
    LiftedSupport ls = random_support(rng);
    Subdivision sub = lift_and_subdivide(ls);
    if (sub.dim < 2) {
      CHECK(sub.cells.empty());
      continue;
    }
    long total = 0;
    for (const SubCell& c : sub.cells) total += area2(c.poly);
    CHECK(total == area2(sub.newton));

    std::map<std::pair<std::pair<long, long>, std::pair<long, long>>, std::set<int>>
        incident;
    for (size_t ci = 0; ci < sub.cells.size(); ci++) {
      const auto& poly = sub.cells[ci].poly;
      for (size_t k = 0; k < poly.size(); k++) {
        Pt p = poly[k], q = poly[(k + 1) % poly.size()];
        if (q < p) std::swap(p, q);
        incident[{{p.x, p.y}, {q.x, q.y}}].insert(static_cast<int>(ci));
      }
    }
    CHECK(incident.size() == sub.edges.size());
    for (const SubEdge& e : sub.edges) {
      CHECK(e.a < e.b);
      auto it = incident.find({{e.a.x, e.a.y}, {e.b.x, e.b.y}});
      REQUIRE(it != incident.end());
      std::set<int> cells{e.c1};
      if (e.c2 >= 0) cells.insert(e.c2);
      CHECK(it->second == cells);
    }
  }
}

TEST_CASE("degenerate supports are flagged, not subdivided") {
  LiftedSupport seg = LiftedSupport::from_polynomial(parse_polynomial("x + x^2"));
  Subdivision sub = lift_and_subdivide(seg);
  CHECK(sub.dim == 1);
  CHECK(sub.cells.empty());
  CHECK_THROWS(dual_curve(sub));
  LiftedSupport pt = LiftedSupport::from_polynomial(parse_polynomial("3x*y"));
  CHECK(lift_and_subdivide(pt).dim == 0);
}

TEST_CASE("tropical evaluation and point classification") {
  LaurentPolynomial f = parse_polynomial(kPentagon);
  LiftedSupport ls = LiftedSupport::from_polynomial(f);

  TropicalEval ev = eval_tropical(ls, Rat(0), Rat(0));
  CHECK(ev.value == Rat(3));
  CHECK(ev.argmax == std::vector<Pt>{{1, 0}, {1, 1}, {1, 2}, {1, 3}});

  Classification cl = classify_point(ls, Rat(0), Rat(0));
  CHECK(cl.kind == PointClass::EdgeInterior);
  CHECK(classify_point(ls, Rat(-2), Rat(0)).kind == PointClass::Vertex);
  CHECK(classify_point(ls, Rat(1), Rat(0)).kind == PointClass::Vertex);
  CHECK(classify_point(ls, Rat(10), Rat(10)).kind == PointClass::Region);

  // Classification agrees with curve membership on random rational points.
  Subdivision sub = lift_and_subdivide(ls);
  TropicalCurve c = dual_curve(sub);
  std::mt19937 rng(33);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 3);
  for (int it = 0; it < 1000; it++) {
    RatPt p{rat_ll(num(rng), den(rng)), rat_ll(num(rng), den(rng))};
    bool on_curve = classify_point(ls, p.x, p.y).kind != PointClass::Region;
    CHECK(on_curve == curve_contains(c, p));
  }
}

TEST_CASE("eval_tropical argmax is the exact maximizer set") {
  std::mt19937 rng(34);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 2);
  for (int it = 0; it < 150; it++) {
    LiftedSupport ls = random_support(rng);
    Rat X = rat_ll(num(rng), den(rng)), Y = rat_ll(num(rng), den(rng));
    TropicalEval ev = eval_tropical(ls, X, Y);
    Rat best;
    bool first = true;
    for (const auto& [p, h] : ls.entries()) {
      Rat v = h + Rat(p.x) * X + Rat(p.y) * Y;
      if (first || v > best) best = v;
      first = false;
    }
    CHECK(ev.value == best);
    for (const auto& [p, h] : ls.entries()) {
      bool attains = h + Rat(p.x) * X + Rat(p.y) * Y == best;
      bool listed = std::binary_search(ev.argmax.begin(), ev.argmax.end(), p);
      CHECK(attains == listed);
    }
  }
}

TEST_CASE("duality counts and balancing on random curves") {
  std::mt19937 rng(35);
  int checked = 0;
  for (int it = 0; it < 300 && checked < 200; it++) {
    LiftedSupport ls = random_support(rng);
    Subdivision sub = lift_and_subdivide(ls);
    if (sub.dim < 2) continue;
    TropicalCurve c = dual_curve(sub);
    checked++;

    CHECK(c.verts.size() == sub.cells.size());
    size_t interior = 0, boundary = 0;
    for (const SubEdge& e : sub.edges) (e.c2 >= 0 ? interior : boundary)++;
    CHECK(c.edges.size() == interior);
    CHECK(c.rays.size() == boundary);

    // Balancing: at each vertex the weighted primitive directions sum to 0.
    std::vector<Pt> sum(c.verts.size(), Pt{0, 0});
    for (const CurveEdge& e : c.edges) {
      sum[e.v1] = sum[e.v1] + Pt{e.weight * e.dir.x, e.weight * e.dir.y};
      sum[e.v2] = sum[e.v2] - Pt{e.weight * e.dir.x, e.weight * e.dir.y};
    }
    for (const CurveRay& r : c.rays)
      sum[r.v] = sum[r.v] + Pt{r.weight * r.dir.x, r.weight * r.dir.y};
    for (const Pt& s : sum) CHECK(s == Pt{0, 0});

    // Weights are the integer lengths of the dual subdivision edges, and
    // edge directions are perpendicular to them.
    for (const CurveEdge& e : c.edges) {
      const SubEdge& se = sub.edges[e.subedge];
      CHECK(e.weight == integer_length(se.a, se.b));
      CHECK(dot(e.dir, se.b - se.a) == 0);
    }
    for (const CurveRay& r : c.rays) {
      const SubEdge& se = sub.edges[r.subedge];
      CHECK(r.weight == integer_length(se.a, se.b));
      CHECK(dot(r.dir, se.b - se.a) == 0);
    }
  }
  CHECK(checked == 200);
}

TEST_CASE("unimodular equivariance of subdivision and curve") {
  std::mt19937 rng(36);
  LaurentPolynomial pent = parse_polynomial(kPentagon);
  for (int it = 0; it < 60; it++) {
    LaurentPolynomial f;
    if (it == 0) {
      f = pent;
    } else {
      LiftedSupport ls = random_support(rng);
      Subdivision s0 = lift_and_subdivide(ls);
      if (s0.dim < 2) continue;
      for (const auto& [p, h] : ls.entries()) {
        // A monomial with the prescribed valuation: coefficient t^{-h}.
        LaurentPolynomial mono;
        mono.add_monomial(p, PuiseuxScalar(Rat(1), -h));
        f += mono;
      }
    }
    Mat2 m = random_unimodular(rng);
    LiftedSupport ls = LiftedSupport::from_polynomial(f);
    LiftedSupport tls = transform(ls, m);
    Subdivision sub = lift_and_subdivide(ls), tsub = lift_and_subdivide(tls);
    REQUIRE(sub.cells.size() == tsub.cells.size());

    // Cells map to cells: match by transformed support sets.
    std::set<std::vector<std::pair<long, long>>> a, b;
    for (const SubCell& cell : sub.cells) {
      std::vector<std::pair<long, long>> key;
      for (Pt p : cell.support) {
        Pt q = m.apply(p);
        key.push_back({q.x, q.y});
      }
      std::sort(key.begin(), key.end());
      a.insert(key);
    }
    for (const SubCell& cell : tsub.cells) {
      std::vector<std::pair<long, long>> key;
      for (Pt p : cell.support) key.push_back({p.x, p.y});
      std::sort(key.begin(), key.end());
      b.insert(key);
    }
    CHECK(a == b);

    // Curve vertices map by the inverse transpose.
    TropicalCurve c = dual_curve(sub), tc = dual_curve(tsub);
    Mat2 n = m.inv_transpose();
    std::set<std::pair<std::string, std::string>> va, vb;
    for (const CurveVertex& v : c.verts) {
      RatPt q = apply_rat(n, v.pos);
      va.insert({rat_str(q.x), rat_str(q.y)});
    }
    for (const CurveVertex& v : tc.verts) vb.insert({rat_str(v.pos.x), rat_str(v.pos.y)});
    CHECK(va == vb);
    // Edge weight multisets agree.
    std::multiset<long> wa, wb;
    for (const CurveEdge& e : c.edges) wa.insert(e.weight);
    for (const CurveEdge& e : tc.edges) wb.insert(e.weight);
    CHECK(wa == wb);
  }
}

TEST_CASE("scale transform shifts the curve and keeps the subdivision") {
  LaurentPolynomial f = parse_polynomial(kPentagon);
  // r = t^2, q = t^-1: heights change by i val(r) + j val(q) = -2i + j.
  PuiseuxScalar r(Rat(1), Rat(2)), q(Rat(1), Rat(-1));
  LaurentPolynomial g = scale_transform(f, r, q);
  Subdivision sub = lift_and_subdivide(LiftedSupport::from_polynomial(f));
  Subdivision tsub = lift_and_subdivide(LiftedSupport::from_polynomial(g));
  REQUIRE(sub.cells.size() == tsub.cells.size());
  Rat vr(-2), vq(1);
  for (size_t k = 0; k < sub.cells.size(); k++) {
    CHECK(sub.cells[k].poly == tsub.cells[k].poly);
    CHECK(sub.cells[k].support == tsub.cells[k].support);
    CHECK(tsub.cells[k].alpha == sub.cells[k].alpha + vr);
    CHECK(tsub.cells[k].beta == sub.cells[k].beta + vq);
  }
  TropicalCurve c = dual_curve(sub), tc = dual_curve(tsub);
  for (size_t k = 0; k < c.verts.size(); k++) {
    CHECK(tc.verts[k].pos.x == c.verts[k].pos.x - vr);
    CHECK(tc.verts[k].pos.y == c.verts[k].pos.y - vq);
  }
  CHECK(multiplicity_at_one(f) == 3);
  CHECK(multiplicity_at(f, r, q) == multiplicity_at_one(g));
}

TEST_CASE("long edges chain collinear pieces maximally") {
  LaurentPolynomial f = parse_polynomial(kPentagon);
  TropicalCurve c = dual_curve(lift_and_subdivide(LiftedSupport::from_polynomial(f)));
  std::vector<LongEdge> longs = maximal_long_edges(c);

  const LongEdge* axis = nullptr;
  for (const LongEdge& le : longs)
    if (le.dir == Dir{1, 0} && le.offset == 0) axis = &le;
  REQUIRE(axis != nullptr);
  CHECK(axis->pieces.size() == 3);  // west ray, weight-3 edge, weight-2 edge
  CHECK(axis->pieces.front().lo_inf);
  CHECK(!axis->pieces.back().hi_inf);
  CHECK(axis->pieces.back().hi == Rat(4));
  CHECK(long_edge_contains(*axis, RatPt{Rat(0), Rat(0)}));
  CHECK(long_edge_contains(*axis, RatPt{Rat(-100), Rat(0)}));
  CHECK(!long_edge_contains(*axis, RatPt{Rat(5), Rat(0)}));
  CHECK(!long_edge_contains(*axis, RatPt{Rat(0), Rat(1)}));

  // Every edge and ray lies in exactly one long edge.
  std::map<std::pair<bool, int>, int> seen;
  for (const LongEdge& le : longs)
    for (const LongPiece& p : le.pieces) seen[{p.is_ray, p.idx}]++;
  CHECK(seen.size() == c.edges.size() + c.rays.size());
  for (const auto& [k, cnt] : seen) CHECK(cnt == 1);

  // Consecutive pieces share an endpoint parameter.
  std::mt19937 rng(37);
  for (int it = 0; it < 100; it++) {
    LiftedSupport ls = random_support(rng);
    Subdivision sub = lift_and_subdivide(ls);
    if (sub.dim < 2) continue;
    for (const LongEdge& le : maximal_long_edges(dual_curve(sub))) {
      for (size_t k = 0; k + 1 < le.pieces.size(); k++) {
        CHECK(!le.pieces[k].hi_inf);
        CHECK(!le.pieces[k + 1].lo_inf);
        CHECK(le.pieces[k].hi == le.pieces[k + 1].lo);
        CHECK(le.pieces[k].vhi == le.pieces[k + 1].vlo);
      }
      if (!le.pieces.empty()) {
        for (size_t k = 0; k < le.pieces.size(); k++)
          if (!le.pieces[k].lo_inf && !le.pieces[k].hi_inf)
            CHECK(le.pieces[k].lo < le.pieces[k].hi);
      }
    }
  }
}

TEST_CASE("profile of the pentagon example") {
  LaurentPolynomial f = parse_polynomial(kPentagon);
  GProfile g = g_profile(LiftedSupport::from_polynomial(f));
  REQUIRE(g.bp.size() == 4);
  CHECK(g.bp[0] == std::pair<Rat, Rat>{Rat(0), Rat(1)});
  CHECK(g.bp[1] == std::pair<Rat, Rat>{Rat(1), Rat(3)});
  CHECK(g.bp[2] == std::pair<Rat, Rat>{Rat(2), Rat(2)});
  CHECK(g.bp[3] == std::pair<Rat, Rat>{Rat(3), Rat(-2)});

  CHECK(g_eval(g, Rat(0)) == Rat(1));
  CHECK(g_eval(g, rat_ll(3, 2)) == rat_ll(5, 2));
  CHECK_THROWS(g_eval(g, Rat(-1)));

  CHECK(g_hat(g, Rat(1)) == Rat(0));
  CHECK(g_hat(g, Rat(0)) == rat_ll(9, 4));
  CHECK(g_hat(g, Rat(3)) == Rat(3));
  CHECK(g_hat(g, Rat(2)) == rat_ll(3, 2));

  CHECK(g_hat_integral(g) == rat_ll(9, 2));
}

TEST_CASE("g_hat integral identity and the flat-roof correction") {
  // Single segment on [0, L]: L^2 / 2.
  for (long L : {1, 2, 7}) {
    GProfile g;
    g.bp = {{Rat(0), Rat(0)}, {Rat(L), Rat(L)}};
    CHECK(g_hat_integral(g) == Rat(L * L) / 2);
  }
  // Constant profile: superlevel is the whole domain, integral span^2.
  GProfile flat;
  flat.bp = {{Rat(0), Rat(5)}, {Rat(3), Rat(5)}};
  CHECK(g_hat(flat, Rat(1)) == Rat(3));
  CHECK(g_hat_integral(flat) == Rat(9));
  // Trapezoid roof of length 1 on span 3: 9/2 + 1/2.
  GProfile trap;
  trap.bp = {{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(1)}, {Rat(3), Rat(0)}};
  CHECK(g_hat_integral(trap) == Rat(5));

  // Random concave profiles with nonzero slopes hit span^2/2 exactly.
  std::mt19937 rng(38);
  std::uniform_int_distribution<int> nseg(1, 7), step(1, 4), num(1, 12), den(1, 4);
  for (int it = 0; it < 200; it++) {
    int n = nseg(rng);
    std::vector<Rat> slopes;
    Rat s = rat_ll(num(rng), den(rng));
    slopes.push_back(s);
    for (int k = 1; k < n; k++) {
      s -= rat_ll(num(rng), den(rng));
      slopes.push_back(s);
    }
    GProfile g;
    Rat x(0), z(0);
    g.bp.push_back({x, z});
    bool has_flat = false;
    for (Rat sl : slopes) {
      if (sl == 0) has_flat = true;
      Rat dx = rat_ll(step(rng));
      x += dx;
      z += sl * dx;
      g.bp.push_back({x, z});
    }
    Rat span = g.span();
    if (!has_flat) CHECK(g_hat_integral(g) == span * span / 2);
  }
}

TEST_CASE("profiles under a unimodular column change") {
  // Mapping (i,j) -> (i+j, j) reslices the columns before taking maxima.
  LiftedSupport ls;
  ls.add({0, 0}, Rat(0));
  ls.add({1, 0}, Rat(2));
  ls.add({0, 1}, Rat(1));
  GProfile g = g_profile(ls, Mat2{1, 1, 0, 1});
  REQUIRE(g.bp.size() == 2);
  CHECK(g.bp[0] == std::pair<Rat, Rat>{Rat(0), Rat(0)});
  CHECK(g.bp[1] == std::pair<Rat, Rat>{Rat(1), Rat(2)});
}
