#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "tropigon/lattice.hpp"

using namespace tropigon;

namespace {

std::vector<Pt> random_points(std::mt19937& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<long> c(lo, hi);
  std::vector<Pt> pts;
  for (int k = 0; k < n; k++) pts.push_back({c(rng), c(rng)});
  return pts;
}

// Oracle: scan every primitive direction in a box. Any direction can be
// reduced modulo the two hull edge vectors at a vertex, so the minimizer of
// the width lies well inside |u| <= span for coordinate spans this small.
WidthResult width_brute(const std::vector<Pt>& pts, long box) {
  WidthResult best;
  best.width = -1;
  for (long x = 0; x <= box; x++)
    for (long y = -box; y <= box; y++) {
      if (x == 0 && y <= 0) continue;
      if (std::gcd(x, std::abs(y)) != 1) continue;
      long w = width_in_direction(pts, Dir{x, y});
      if (best.width < 0 || w < best.width) best = {w, Dir{x, y}};
    }
  return best;
}

// Oracle: the thickness definition checked literally over the narrow box.
bool thick_brute(const std::vector<Pt>& pts, long m, long box) {
  std::vector<Pt> hull = convex_hull(pts);
  int dim = hull_dim(hull);
  if (dim < 0) return true;
  if (dim == 0) return false;
  if (dim == 1) return integer_length(hull.front(), hull.back()) >= m;
  for (long x = 0; x <= box; x++)
    for (long y = -box; y <= box; y++) {
      if (x == 0 && y <= 0) continue;
      if (std::gcd(x, std::abs(y)) != 1) continue;
      Dir u{x, y};
      long w = width_in_direction(hull, u);
      if (w >= m) continue;
      long need = m - w;
      int sides = 0;
      for (size_t i = 0; i < hull.size(); i++) {
        Pt a = hull[i], b = hull[(i + 1) % hull.size()];
        if (dot(b - a, u.pt()) != 0) continue;
        if (integer_length(a, b) >= need) sides++;
      }
      if (sides < 2) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("convex hull basics") {
  std::vector<Pt> sq = convex_hull({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}, {2, 1}});
  CHECK(sq == std::vector<Pt>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  CHECK(area2(sq) == 8);
  CHECK(hull_dim(sq) == 2);
  CHECK(hull_dim(convex_hull({{1, 1}})) == 0);
  CHECK(hull_dim(convex_hull({{0, 0}, {2, 4}, {1, 2}})) == 1);
  CHECK(hull_dim(convex_hull({})) == -1);

  std::mt19937 rng(21);
  for (int it = 0; it < 200; it++) {
    std::vector<Pt> pts = random_points(rng, 12, -8, 8);
    std::vector<Pt> hull = convex_hull(pts);
    CHECK(convex_hull(hull) == hull);
    if (hull_dim(hull) == 2) {
      // CCW and all points inside (left of or on every edge).
      for (size_t i = 0; i < hull.size(); i++) {
        Pt a = hull[i], b = hull[(i + 1) % hull.size()];
        CHECK(cross(b - a, hull[(i + 2) % hull.size()] - a) > 0);
        for (const Pt& p : pts) CHECK(cross(b - a, p - a) >= 0);
      }
    }
  }
}

TEST_CASE("integer length and directional width") {
  CHECK(integer_length({0, 0}, {4, 6}) == 2);
  CHECK(integer_length({1, 1}, {1, 1}) == 0);
  CHECK(integer_length({-1, 0}, {2, 0}) == 3);
  CHECK(width_in_direction({{0, 0}, {2, 4}, {4, 2}}, Dir{1, 0}) == 4);
  CHECK(width_in_direction({{0, 0}, {2, 4}, {4, 2}}, Dir{1, 1}) == 6);
  CHECK(width_in_direction({{3, 5}}, Dir{1, 0}) == 0);
}

TEST_CASE("minimal width equals brute enumeration on 500 random sets") {
  std::mt19937 rng(22);
  std::uniform_int_distribution<int> n(1, 10);
  for (int it = 0; it < 500; it++) {
    std::vector<Pt> pts = random_points(rng, n(rng), 0, 20);
    WidthResult got = minimal_lattice_width(pts);
    WidthResult want = width_brute(pts, 25);
    CHECK(got.width == want.width);
    // The returned witness must attain the claimed width.
    CHECK(width_in_direction(pts, got.witness) == got.width);
  }
}

TEST_CASE("minimal width golden cases") {
  CHECK(minimal_lattice_width({{0, 0}, {2, 4}, {4, 2}}).width == 4);
  CHECK(minimal_lattice_width({{0, 0}, {1, 2}, {2, 1}}).width == 2);
  CHECK(minimal_lattice_width({{0, 0}, {3, 0}, {0, 3}}).width == 3);
  CHECK(minimal_lattice_width({{0, 0}, {1, 0}}).width == 0);  // 1-dimensional
  WidthResult w = minimal_lattice_width({{0, 0}, {7, 1}});
  CHECK(w.width == 0);
  CHECK(dot(w.witness.pt(), Pt{7, 1}) == 0);
}

TEST_CASE("narrow directions are exactly the brute narrow set") {
  std::mt19937 rng(23);
  for (int it = 0; it < 150; it++) {
    std::vector<Pt> pts = random_points(rng, 8, 0, 9);
    if (hull_dim(convex_hull(pts)) != 2) continue;
    for (long m : {1, 2, 3, 5}) {
      std::set<std::pair<long, long>> brute;
      for (long x = 0; x <= 14; x++)
        for (long y = -14; y <= 14; y++) {
          if (x == 0 && y <= 0) continue;
          if (std::gcd(x, std::abs(y)) != 1) continue;
          if (width_in_direction(pts, Dir{x, y}) < m) brute.insert({x, y});
        }
      std::set<std::pair<long, long>> got;
      for (const auto& [u, w] : narrow_directions(pts, m)) {
        CHECK(w == width_in_direction(pts, u));
        CHECK(w < m);
        got.insert({u.x, u.y});
      }
      CHECK(got == brute);
    }
  }
}

TEST_CASE("m-thickness matches the definitional oracle") {
  std::mt19937 rng(24);
  std::uniform_int_distribution<int> n(1, 8), m(1, 5);
  for (int it = 0; it < 300; it++) {
    std::vector<Pt> pts = random_points(rng, n(rng), 0, 7);
    long mm = m(rng);
    ThickResult got = is_m_thick(pts, mm);
    CHECK(got.thick == thick_brute(pts, mm, 14));
    if (!got.thick && hull_dim(convex_hull(pts)) == 2) {
      REQUIRE(got.witness.has_value());
      CHECK(width_in_direction(pts, *got.witness) < mm);
    }
  }
}

TEST_CASE("m-thickness golden cases") {
  // 1 x 2 rectangle: 3-thick (both narrow directions see two long sides).
  std::vector<Pt> rect{{0, 0}, {1, 0}, {1, 2}, {0, 2}};
  CHECK(is_m_thick(rect, 3).thick);
  CHECK(is_m_thick(rect, 4).thick == false);
  // A triangle is never m-thick for m > width: one side only.
  CHECK(is_m_thick({{0, 0}, {1, 0}, {0, 1}}, 2).thick == false);
  CHECK(is_m_thick({{0, 0}, {1, 0}, {0, 1}}, 1).thick);
  // Empty is thick, a point is not.
  CHECK(is_m_thick({}, 3).thick);
  CHECK(is_m_thick({{5, 5}}, 1).thick == false);
  // Segment: integer length 3 is 3-thick but not 4-thick.
  CHECK(is_m_thick({{0, 0}, {3, 0}}, 3).thick);
  CHECK(is_m_thick({{0, 0}, {3, 0}}, 4).thick == false);
}

TEST_CASE("defect and the defect functional") {
  std::vector<Pt> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(defect(sq, Dir{1, 0}, 2) == 1);
  CHECK(defect(sq, Dir{1, 1}, 2) == 0);
  CHECK(defect(sq, Dir{1, 0}, 1) == 0);
  DefectFunctional df = defect_functional(sq, 2);
  CHECK(df.f1 == Rat(2));
  CHECK(df.f2 == Rat(3));
  CHECK_THROWS(defect_functional({{0, 0}, {1, 0}}, 2));
}

TEST_CASE("width-area inequality on random polygons, equality on k-triangles") {
  std::mt19937 rng(25);
  for (int it = 0; it < 300; it++) {
    std::vector<Pt> pts = random_points(rng, 8, -10, 10);
    if (hull_dim(convex_hull(pts)) != 2) continue;
    WidthAreaResult r = width_area_check(pts);
    CHECK(r.pass);
    CHECK(r.area >= r.bound);
    CHECK(r.width == minimal_lattice_width(pts).width);
  }
  for (long k = 1; k <= 6; k++) {
    WidthAreaResult r = width_area_check({{0, 0}, {k, 2 * k}, {2 * k, k}});
    CHECK(r.width == 2 * k);
    CHECK(r.area == r.bound);  // area 3k^2/2 attains the even bound
  }
  // Unit triangle attains the odd bound (3*0+0+1)/2.
  WidthAreaResult odd = width_area_check({{0, 0}, {1, 0}, {0, 1}});
  CHECK(odd.width == 1);
  CHECK(odd.area == odd.bound);
}

TEST_CASE("lattice point enumeration satisfies Pick's identity") {
  std::mt19937 rng(26);
  for (int it = 0; it < 200; it++) {
    std::vector<Pt> hull = convex_hull(random_points(rng, 7, -6, 6));
    if (hull_dim(hull) != 2) continue;
    std::vector<Pt> inside = lattice_points_in(hull);
    long boundary = 0;
    for (size_t i = 0; i < hull.size(); i++)
      boundary += integer_length(hull[i], hull[(i + 1) % hull.size()]);
    CHECK(2 * static_cast<long>(inside.size()) == area2(hull) + boundary + 2);
    std::set<std::pair<long, long>> uniq;
    for (const Pt& p : inside) uniq.insert({p.x, p.y});
    CHECK(uniq.size() == inside.size());
  }
  CHECK(lattice_points_in(convex_hull({{0, 0}, {1, 0}, {0, 1}})).size() == 3);
}
