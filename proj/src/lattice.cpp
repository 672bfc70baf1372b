#include "tropigon/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace tropigon {

Dir canonical_dir(long x, long y) {
  if (x == 0 && y == 0) throw std::domain_error("canonical_dir: zero vector");
  long g = std::gcd(std::abs(x), std::abs(y));
  x /= g;
  y /= g;
  if (x < 0 || (x == 0 && y < 0)) {
    x = -x;
    y = -y;
  }
  return {x, y};
}

Pt primitive(Pt v) {
  if (v.x == 0 && v.y == 0) throw std::domain_error("primitive: zero vector");
  long g = std::gcd(std::abs(v.x), std::abs(v.y));
  return {v.x / g, v.y / g};
}

std::vector<Pt> convex_hull(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<Pt> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; i++) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) k--;
    h[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) k--;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

int hull_dim(const std::vector<Pt>& hull) {
  if (hull.empty()) return -1;
  if (hull.size() == 1) return 0;
  if (hull.size() == 2) return 1;
  return 2;
}

long area2(const std::vector<Pt>& hull) {
  long s = 0;
  size_t n = hull.size();
  if (n < 3) return 0;
  for (size_t i = 0; i < n; i++) s += cross(hull[i], hull[(i + 1) % n]);
  return s;
}

long integer_length(Pt a, Pt b) {
  if (a == b) return 0;
  return std::gcd(std::abs(b.x - a.x), std::abs(b.y - a.y));
}

long width_in_direction(const std::vector<Pt>& pts, Dir u) {
  if (pts.empty()) throw std::domain_error("width_in_direction: empty set");
  long lo = dot(pts[0], u.pt()), hi = lo;
  for (const Pt& p : pts) {
    long d = dot(p, u.pt());
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return hi - lo;
}

namespace {

// Direction ordering used for witnesses: (|u.y|, u.x, u.y < 0) ascending.
bool dir_key_less(Dir a, Dir b) {
  auto key = [](Dir d) {
    return std::tuple<long, long, int>(std::abs(d.y), d.x, d.y < 0);
  };
  return key(a) < key(b);
}

// One round of the Gauss/Lagarias reduction on the width norm. Returns an
// upper bound for the minimal width of a 2D hull.
long gauss_bound(const std::vector<Pt>& hull) {
  auto norm = [&](Pt u) {
    long lo = dot(hull[0], u), hi = lo;
    for (const Pt& p : hull) {
      long d = dot(p, u);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    return hi - lo;
  };
  Pt u{1, 0}, v{0, 1};
  for (;;) {
    if (norm(u) > norm(v)) std::swap(u, v);
    long nu = norm(u), nv = norm(v);
    // argmin over k of norm(v - k u); the function is convex in k and
    // exceeds nv outside |k| <= 2 nv / nu + 1.
    long c = 2 * nv / std::max<long>(nu, 1) + 2;
    auto g = [&](long k) { return norm(v - Pt{k * u.x, k * u.y}); };
    long lo = -c, hi = c;
    while (hi - lo >= 3) {
      long m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
      if (g(m1) <= g(m2))
        hi = m2;
      else
        lo = m1;
    }
    long bestk = lo;
    for (long k = lo + 1; k <= hi; k++)
      if (g(k) < g(bestk)) bestk = k;
    Pt w = v - Pt{bestk * u.x, bestk * u.y};
    if (norm(w) >= nv) break;
    v = w;
  }
  long b = std::min(norm(u), norm(v));
  b = std::min(b, norm(u + v));
  b = std::min(b, norm(u - v));
  return b;
}

// Complete list of (canonical primitive u, width) with width < m for a 2D
// hull. Any such u satisfies |dot(u, d)| <= m - 1 for all edge vectors d, so
// expanding u in a basis of two hull directions with maximal |det| bounds
// its coordinates.
std::vector<std::pair<Dir, long>> narrow_box(const std::vector<Pt>& hull,
                                                  long m) {
  size_t n = hull.size();
  Pt d1, d2;
  long best = 0;
  for (size_t a = 0; a < n; a++)
    for (size_t b = a + 1; b < n; b++)
      for (size_t c = b + 1; c < n; c++) {
        long t = std::abs(cross(hull[b] - hull[a], hull[c] - hull[a]));
        if (t > best) {
          best = t;
          d1 = hull[b] - hull[a];
          d2 = hull[c] - hull[a];
        }
      }
  long lim = m - 1;
  long b1 = lim * (std::abs(d2.y) + std::abs(d1.y)) / best;
  long b2 = lim * (std::abs(d2.x) + std::abs(d1.x)) / best;
  std::vector<std::pair<Dir, long>> out;
  for (long x = 0; x <= b1; x++)
    for (long y = -b2; y <= b2; y++) {
      if (x == 0 && y <= 0) continue;
      if (std::gcd(x, std::abs(y)) != 1) continue;
      Dir u{x, y};
      long w = width_in_direction(hull, u);
      if (w < m) out.emplace_back(u, w);
    }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return dir_key_less(a.first, b.first); });
  return out;
}

}  // namespace

WidthResult minimal_lattice_width(const std::vector<Pt>& pts) {
  auto hull = convex_hull(pts);
  int dim = hull_dim(hull);
  if (dim < 0) throw std::domain_error("minimal_lattice_width: empty set");
  if (dim == 0) return {0, Dir{1, 0}};
  if (dim == 1) {
    Pt d = primitive(hull[1] - hull[0]);
    return {0, canonical_dir(-d.y, d.x)};
  }
  long ub = gauss_bound(hull);
  auto narrow = narrow_box(hull, ub + 1);
  WidthResult res{ub, Dir{0, 0}};
  bool found = false;
  for (const auto& [u, w] : narrow) {
    if (!found || w < res.width) {
      res = {w, u};
      found = true;
    }
  }
  if (!found) throw std::logic_error("minimal_lattice_width: reduction bound not attained");
  return res;
}

std::vector<std::pair<Dir, long>> narrow_directions(const std::vector<Pt>& pts,
                                                         long m) {
  auto hull = convex_hull(pts);
  if (hull_dim(hull) != 2)
    throw std::domain_error("narrow_directions: set is not two-dimensional");
  return narrow_box(hull, m);
}

ThickResult is_m_thick(const std::vector<Pt>& pts, long m) {
  if (m <= 0) return {true, std::nullopt};
  auto hull = convex_hull(pts);
  int dim = hull_dim(hull);
  if (dim < 0) return {true, std::nullopt};
  if (dim == 0) return {false, std::nullopt};
  if (dim == 1) return {integer_length(hull[0], hull[1]) >= m, std::nullopt};
  for (const auto& [u, w] : narrow_box(hull, m)) {
    long need = m - w;
    int good_sides = 0;
    size_t n = hull.size();
    for (size_t i = 0; i < n; i++) {
      Pt e = hull[(i + 1) % n] - hull[i];
      if (dot(e, u.pt()) != 0) continue;
      if (integer_length(hull[i], hull[(i + 1) % n]) >= need) good_sides++;
    }
    if (good_sides < 2) return {false, u};
  }
  return {true, std::nullopt};
}

long defect(const std::vector<Pt>& pts, Dir u, long m) {
  return std::max<long>(m - width_in_direction(pts, u), 0);
}

DefectFunctional defect_functional(const std::vector<Pt>& pts, long m) {
  auto hull = convex_hull(pts);
  if (hull_dim(hull) != 2)
    throw std::domain_error("defect_functional: set is not two-dimensional");
  if (!is_m_thick(pts, m).thick)
    throw std::domain_error("defect_functional: set is not m-thick");
  Rat area = Rat(area2(hull)) / 2;
  Rat sq = 0;
  for (const auto& [u, w] : narrow_box(hull, m)) {
    long d = m - w;
    sq += Rat(d * d);
  }
  return {area + sq / 2, 2 * area + sq / 2};
}

WidthAreaResult width_area_check(const std::vector<Pt>& pts) {
  auto hull = convex_hull(pts);
  WidthAreaResult res;
  res.width = hull_dim(hull) == 2 ? minimal_lattice_width(hull).width : 0;
  res.area = Rat(area2(hull)) / 2;
  long k = res.width / 2;
  if (res.width % 2 == 0)
    res.bound = Rat(3 * k * k) / 2;
  else
    res.bound = Rat(3 * k * k + 3 * k + 1) / 2;
  res.pass = res.area >= res.bound;
  return res;
}

std::vector<Pt> lattice_points_in(const std::vector<Pt>& hull_in) {
  auto hull = convex_hull(hull_in);
  int dim = hull_dim(hull);
  std::vector<Pt> out;
  if (dim < 0) return out;
  if (dim == 0) return {hull[0]};
  if (dim == 1) {
    Pt d = primitive(hull[1] - hull[0]);
    long len = integer_length(hull[0], hull[1]);
    for (long k = 0; k <= len; k++)
      out.push_back({hull[0].x + k * d.x, hull[0].y + k * d.y});
    std::sort(out.begin(), out.end());
    return out;
  }
  long x0 = hull[0].x, x1 = x0, y0 = hull[0].y, y1 = y0;
  for (const Pt& p : hull) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  size_t n = hull.size();
  for (long x = x0; x <= x1; x++)
    for (long y = y0; y <= y1; y++) {
      Pt p{x, y};
      bool in = true;
      for (size_t i = 0; i < n && in; i++)
        if (cross(hull[(i + 1) % n] - hull[i], p - hull[i]) < 0) in = false;
      if (in) out.push_back(p);
    }
  return out;
}

}  // namespace tropigon
