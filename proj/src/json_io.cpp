#include "tropigon/json_io.hpp"

namespace tropigon {

namespace {

json ratpt_json(const RatPt& p) { return json::array({rat_str(p.x), rat_str(p.y)}); }

}  // namespace

json polynomial_to_json(const LaurentPolynomial& f) {
  json mons = json::array();
  for (const auto& [ij, c] : f.monomials()) {
    json coef = json::array();
    for (const auto& [e, q] : c.terms())
      coef.push_back({{"exp", rat_str(e)}, {"val", rat_str(q)}});
    mons.push_back({{"i", ij.x}, {"j", ij.y}, {"coef", coef}});
  }
  return {{"monomials", mons}};
}

json polygon_to_json(const std::vector<Pt>& pts) {
  json arr = json::array();
  for (const Pt& p : pts) arr.push_back(json::array({p.x, p.y}));
  return {{"points", arr}};
}

std::vector<Pt> polygon_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    throw std::invalid_argument("polygon JSON must be {\"points\":[[i,j],...]}");
  std::vector<Pt> out;
  for (const auto& e : j["points"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw std::invalid_argument("polygon point must be a pair of integers");
    out.push_back({e[0].get<long>(), e[1].get<long>()});
  }
  return out;
}

json tropicalization_to_json(const Subdivision& sub, const TropicalCurve* curve) {
  json j;
  j["newton"] = polygon_to_json(sub.newton)["points"];
  j["degenerate"] = sub.dim < 2;
  j["dim"] = sub.dim;
  json cells = json::array();
  for (const SubCell& c : sub.cells) {
    json jc;
    jc["vertices"] = polygon_to_json(c.poly)["points"];
    jc["support"] = polygon_to_json(c.support)["points"];
    jc["affine"] = {{"alpha", rat_str(c.alpha)}, {"beta", rat_str(c.beta)},
                    {"gamma", rat_str(c.gamma)}};
    jc["area"] = rat_str(Rat(area2(c.poly)) / 2);
    cells.push_back(jc);
  }
  j["cells"] = cells;
  json edges = json::array();
  for (const SubEdge& e : sub.edges) {
    json je;
    je["a"] = json::array({e.a.x, e.a.y});
    je["b"] = json::array({e.b.x, e.b.y});
    je["cells"] = e.c2 >= 0 ? json::array({e.c1, e.c2}) : json::array({e.c1});
    je["length"] = integer_length(e.a, e.b);
    edges.push_back(je);
  }
  j["edges"] = edges;
  if (curve) {
    json jc;
    json verts = json::array();
    for (const CurveVertex& v : curve->verts)
      verts.push_back({{"pos", ratpt_json(v.pos)}, {"cell", v.cell}});
    jc["vertices"] = verts;
    json cedges = json::array();
    for (const CurveEdge& e : curve->edges)
      cedges.push_back({{"v1", e.v1},
                        {"v2", e.v2},
                        {"dir", json::array({e.dir.x, e.dir.y})},
                        {"weight", e.weight},
                        {"dual_edge", e.subedge}});
    jc["edges"] = cedges;
    json crays = json::array();
    for (const CurveRay& r : curve->rays)
      crays.push_back({{"v", r.v},
                       {"dir", json::array({r.dir.x, r.dir.y})},
                       {"weight", r.weight},
                       {"dual_edge", r.subedge}});
    jc["rays"] = crays;
    j["curve"] = jc;
  }
  return j;
}

json certificate_to_json(const Certificate& cert) {
  json j;
  j["verdict"] = cert.verdict;
  json checks = json::array();
  for (const CheckRow& r : cert.checks)
    checks.push_back({{"name", r.name},
                      {"status", r.status},
                      {"value", r.value},
                      {"bound", r.bound},
                      {"witness", r.witness}});
  j["checks"] = checks;
  return j;
}

json intersection_to_json(const StableResult& r) {
  json arr = json::array();
  for (const WeightedPoint& w : r.points)
    arr.push_back(
        {{"point", ratpt_json(w.point)}, {"mult", w.mult}, {"component", w.component}});
  return arr;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace tropigon
