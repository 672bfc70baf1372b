#include "tropigon/subdivision.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace tropigon {

LiftedSupport LiftedSupport::from_polynomial(const LaurentPolynomial& f) {
  if (f.is_zero()) throw std::domain_error("from_polynomial: zero polynomial");
  LiftedSupport ls;
  for (const auto& [ij, c] : f.monomials()) ls.add(ij, *c.valuation());
  return ls;
}

void LiftedSupport::add(Pt p, const Rat& h) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                             [](const auto& e, Pt q) { return e.first < q; });
  if (it != entries_.end() && it->first == p)
    throw std::logic_error("LiftedSupport::add: duplicate point");
  entries_.insert(it, {p, h});
}

std::vector<Pt> LiftedSupport::points() const {
  std::vector<Pt> out;
  out.reserve(entries_.size());
  for (const auto& [p, h] : entries_) out.push_back(p);
  return out;
}

std::optional<Rat> LiftedSupport::height(Pt p) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                             [](const auto& e, Pt q) { return e.first < q; });
  if (it == entries_.end() || it->first != p) return std::nullopt;
  return it->second;
}

LiftedSupport transform(const LiftedSupport& ls, const Mat2& m) {
  long d = m.det();
  if (d != 1 && d != -1) throw std::domain_error("transform: matrix is not unimodular");
  LiftedSupport out;
  for (const auto& [p, h] : ls.entries()) out.add(m.apply(p), h);
  return out;
}

namespace {

struct Wrapper {
  const LiftedSupport& ls;
  std::vector<Pt> pts;

  // Sign of ((B-A) x (R-A)) . (S-A) with lifted z coordinates: positive when
  // S lies strictly above the plane through A, B, R (R strictly left of AB).
  int above(Pt A, Pt B, Pt R, Pt S) const {
    Rat bz = *ls.height(B) - *ls.height(A);
    Rat rz = *ls.height(R) - *ls.height(A);
    Rat sz = *ls.height(S) - *ls.height(A);
    long bx = B.x - A.x, by = B.y - A.y;
    long rx = R.x - A.x, ry = R.y - A.y;
    long sx = S.x - A.x, sy = S.y - A.y;
    Rat nx = Rat(by) * rz - bz * Rat(ry);
    Rat ny = bz * Rat(rx) - Rat(bx) * rz;
    Rat nz = Rat(bx * ry - by * rx);
    Rat d = nx * Rat(sx) + ny * Rat(sy) + nz * sz;
    return d > 0 ? 1 : (d < 0 ? -1 : 0);
  }

  // Plane z = alpha x + beta y + gamma through three lifted points.
  std::tuple<Rat, Rat, Rat> plane(Pt A, Pt B, Pt C) const {
    long D = cross(B - A, C - A);
    Rat z1 = *ls.height(B) - *ls.height(A);
    Rat z2 = *ls.height(C) - *ls.height(A);
    Rat alpha = (z1 * Rat(C.y - A.y) - z2 * Rat(B.y - A.y)) / Rat(D);
    Rat beta = (z2 * Rat(B.x - A.x) - z1 * Rat(C.x - A.x)) / Rat(D);
    Rat gamma = *ls.height(A) - alpha * Rat(A.x) - beta * Rat(A.y);
    return {alpha, beta, gamma};
  }
};

}  // namespace

Subdivision lift_and_subdivide(const LiftedSupport& ls) {
  if (ls.empty()) throw std::domain_error("lift_and_subdivide: empty support");
  Subdivision sub;
  Wrapper w{ls, ls.points()};
  sub.newton = convex_hull(w.pts);
  sub.dim = hull_dim(sub.newton);
  if (sub.dim < 2) return sub;

  // Initial directed edges: strict 1D upper envelopes along the Newton
  // boundary, oriented CCW so the polygon interior is on the left.
  std::vector<std::pair<Pt, Pt>> queue;
  size_t nb = sub.newton.size();
  for (size_t k = 0; k < nb; k++) {
    Pt v0 = sub.newton[k], v1 = sub.newton[(k + 1) % nb];
    Pt d = primitive(v1 - v0);
    std::vector<std::pair<long, Pt>> on;  // (param, point)
    for (const Pt& p : w.pts)
      if (cross(v1 - v0, p - v0) == 0) {
        long s = dot(d, p - v0);
        if (s >= 0 && s <= dot(d, v1 - v0)) on.emplace_back(s, p);
      }
    std::sort(on.begin(), on.end());
    // Strict upper envelope over (param, height).
    std::vector<std::pair<long, Pt>> env;
    for (const auto& sp : on) {
      while (env.size() >= 2) {
        const auto& [s1, p1] = env[env.size() - 2];
        const auto& [s2, p2] = env[env.size() - 1];
        Rat c = Rat(s2 - s1) * (*ls.height(sp.second) - *ls.height(p1)) -
                (*ls.height(p2) - *ls.height(p1)) * Rat(sp.first - s1);
        if (c >= 0)
          env.pop_back();
        else
          break;
      }
      env.push_back(sp);
    }
    for (size_t i = 0; i + 1 < env.size(); i++)
      queue.emplace_back(env[i].second, env[i + 1].second);
  }

  std::set<std::pair<Pt, Pt>> done;
  std::map<std::tuple<Rat, Rat, Rat>, int> planes;
  while (!queue.empty()) {
    auto [A, B] = queue.back();
    queue.pop_back();
    if (!done.insert({A, B}).second) continue;
    Pt best{0, 0};
    bool found = false;
    for (const Pt& S : w.pts) {
      if (cross(B - A, S - A) <= 0) continue;
      if (!found || w.above(A, B, best, S) > 0) {
        best = S;
        found = true;
      }
    }
    if (!found) continue;  // Newton boundary edge, no facet on this side
    auto key = w.plane(A, B, best);
    auto [it, fresh] = planes.try_emplace(key, static_cast<int>(sub.cells.size()));
    if (!fresh) continue;
    SubCell cell;
    std::tie(cell.alpha, cell.beta, cell.gamma) = key;
    for (const auto& [p, hp] : ls.entries()) {
      Rat lift = cell.alpha * Rat(p.x) + cell.beta * Rat(p.y) + cell.gamma;
      if (hp == lift) cell.support.push_back(p);
      else if (hp > lift)
        throw std::logic_error("lift_and_subdivide: point above facet plane");
    }
    cell.poly = convex_hull(cell.support);
    if (hull_dim(cell.poly) != 2)
      throw std::logic_error("lift_and_subdivide: degenerate facet");
    size_t np = cell.poly.size();
    for (size_t i = 0; i < np; i++) {
      Pt u = cell.poly[i], v = cell.poly[(i + 1) % np];
      done.insert({u, v});  // this cell is the facet left of (u, v)
      if (!done.count({v, u})) queue.emplace_back(v, u);
    }
    sub.cells.push_back(std::move(cell));
  }

  // Deterministic cell order: by (first, second) hull vertex.
  std::vector<int> order(sub.cells.size());
  for (size_t k = 0; k < order.size(); k++) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& pa = sub.cells[a].poly;
    const auto& pb = sub.cells[b].poly;
    return std::pair(pa[0], pa[1]) < std::pair(pb[0], pb[1]);
  });
  std::vector<SubCell> cells;
  cells.reserve(order.size());
  for (int k : order) cells.push_back(std::move(sub.cells[k]));
  sub.cells = std::move(cells);

  // Area of the cells must tile the Newton polygon.
  long total = 0;
  for (const SubCell& c : sub.cells) total += area2(c.poly);
  if (total != area2(sub.newton))
    throw std::logic_error("lift_and_subdivide: cells do not tile the polygon");

  // Edges, with incident cells; boundary edges keep c2 == -1.
  std::map<std::pair<Pt, Pt>, std::vector<int>> emap;
  for (size_t k = 0; k < sub.cells.size(); k++) {
    const auto& poly = sub.cells[k].poly;
    for (size_t i = 0; i < poly.size(); i++) {
      Pt a = poly[i], b = poly[(i + 1) % poly.size()];
      if (b < a) std::swap(a, b);
      emap[{a, b}].push_back(static_cast<int>(k));
    }
  }
  for (auto& [ab, cs] : emap) {
    if (cs.size() > 2) throw std::logic_error("lift_and_subdivide: edge in >2 cells");
    SubEdge e;
    e.a = ab.first;
    e.b = ab.second;
    std::sort(cs.begin(), cs.end());
    e.c1 = cs[0];
    e.c2 = cs.size() == 2 ? cs[1] : -1;
    sub.edges.push_back(e);
  }
  return sub;
}

TropicalEval eval_tropical(const LiftedSupport& ls, const Rat& X, const Rat& Y) {
  if (ls.empty()) throw std::domain_error("eval_tropical: empty support");
  TropicalEval ev;
  bool init = false;
  for (const auto& [p, h] : ls.entries()) {
    Rat v = h + Rat(p.x) * X + Rat(p.y) * Y;
    if (!init || v > ev.value) {
      ev.value = v;
      ev.argmax.clear();
      init = true;
    }
    if (v == ev.value) ev.argmax.push_back(p);
  }
  std::sort(ev.argmax.begin(), ev.argmax.end());
  return ev;
}

Classification classify_point(const LiftedSupport& ls, const Rat& X, const Rat& Y) {
  TropicalEval ev = eval_tropical(ls, X, Y);
  Classification cl;
  cl.argmax = ev.argmax;
  cl.value = ev.value;
  int dim = hull_dim(convex_hull(ev.argmax));
  cl.kind = dim <= 0 ? PointClass::Region
                     : (dim == 1 ? PointClass::EdgeInterior : PointClass::Vertex);
  return cl;
}

}  // namespace tropigon
