#include "tropigon/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tropigon/curve.hpp"
#include "tropigon/intersect.hpp"
#include "tropigon/json_io.hpp"
#include "tropigon/laurent.hpp"
#include "tropigon/singular.hpp"
#include "tropigon/subdivision.hpp"
#include "tropigon/svg.hpp"

namespace tropigon {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LaurentPolynomial load_polynomial(const std::string& path) {
  try {
    return parse_polynomial(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write " + out_path);
  out << text;
}

bool use_color(const std::string& out_path) {
  return out_path.empty() && isatty(1) && std::getenv("TROPIGON_NO_COLOR") == nullptr;
}

std::string colored(const std::string& s, const char* code, bool on) {
  if (!on) return s;
  return std::string("\x1b[") + code + "m" + s + "\x1b[0m";
}

Rat parse_rat_arg(const std::string& s) {
  try {
    return rat_parse(s);
  } catch (const std::exception&) {
    throw InputError("bad rational '" + s + "'");
  }
}

RatPt parse_point_arg(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw InputError("--point expects p/q,p/q");
  return RatPt{parse_rat_arg(s.substr(0, comma)), parse_rat_arg(s.substr(comma + 1))};
}

// A polygon is given either as {"points":[[i,j],...]} or as a polynomial
// whose Newton polygon is taken; JSON is recognized by a leading '{'.
std::vector<Pt> load_polygon(const std::string& path) {
  std::string text = read_file(path);
  size_t k = text.find_first_not_of(" \t\r\n");
  if (k != std::string::npos && text[k] == '{') {
    try {
      return polygon_from_json(json::parse(text));
    } catch (const std::exception& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  try {
    LaurentPolynomial f = parse_polynomial(text);
    std::vector<Pt> pts;
    for (const auto& [p, c] : f.monomials()) pts.push_back(p);
    return pts;
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string dir_str(Dir u) {
  return "(" + std::to_string(u.x) + "," + std::to_string(u.y) + ")";
}

struct Tropicalization {
  LiftedSupport ls;
  Subdivision sub;
  TropicalCurve curve;  // empty when degenerate
  bool degenerate = false;
};

Tropicalization tropicalize(const LaurentPolynomial& f) {
  Tropicalization t;
  t.ls = LiftedSupport::from_polynomial(f);
  if (t.ls.empty()) throw InputError("zero polynomial");
  t.sub = lift_and_subdivide(t.ls);
  t.degenerate = t.sub.dim < 2;
  if (!t.degenerate) t.curve = dual_curve(t.sub);
  return t;
}

std::string trop_text(const Tropicalization& t) {
  std::ostringstream out;
  out << "newton:";
  for (const Pt& p : t.sub.newton) out << " (" << p.x << "," << p.y << ")";
  out << "\n";
  if (t.degenerate) {
    out << "degenerate: newton polygon has dimension " << t.sub.dim << "\n";
    return out.str();
  }
  out << "cells: " << t.sub.cells.size() << "\n";
  for (size_t i = 0; i < t.sub.cells.size(); i++) {
    const SubCell& c = t.sub.cells[i];
    out << "  cell " << i << ": area " << rat_str(Rat(area2(c.poly)) / 2) << " dual ("
        << rat_str(c.dual().x) << "," << rat_str(c.dual().y) << ")\n";
  }
  out << "vertices:";
  for (const CurveVertex& v : t.curve.verts)
    out << " (" << rat_str(v.pos.x) << "," << rat_str(v.pos.y) << ")";
  out << "\nedges: " << t.curve.edges.size() << "\n";
  for (const CurveEdge& e : t.curve.edges)
    out << "  " << e.v1 << "-" << e.v2 << " weight " << e.weight << "\n";
  out << "rays: " << t.curve.rays.size() << "\n";
  for (const CurveRay& r : t.curve.rays)
    out << "  from " << r.v << " direction (" << r.dir.x << "," << r.dir.y
        << ") weight " << r.weight << "\n";
  return out.str();
}

std::string render_tropicalization(const Tropicalization& t, const std::string& format) {
  if (format == "svg") return render_svg(t.sub, t.degenerate ? nullptr : &t.curve);
  if (format == "text") return trop_text(t);
  return dump_json(tropicalization_to_json(t.sub, t.degenerate ? nullptr : &t.curve));
}

// Certificate plus the bounded line-intersection check; a violation there is
// an unconditional refutation.
Certificate analyze_one(const LaurentPolynomial& f, RatPt P, long m,
                        long bound) {
  Certificate cert = exertion_certificate(f, P, m);
  Tropicalization t = tropicalize(f);
  CheckRow row;
  row.name = "line_intersection_multiplicity";
  row.bound = std::to_string(m);
  if (t.degenerate || !curve_contains(t.curve, P)) {
    row.status = "not-applicable";
  } else {
    MultCheckResult mc = tropical_multiplicity_check(t.curve, P, m, bound);
    if (mc.pass) {
      row.status = "pass";
      row.value = "local >= " + std::to_string(m) + " at " +
                  std::to_string(mc.positions_checked) + " line positions";
    } else {
      const MultViolation& v = mc.violations.front();
      row.status = "fail";
      row.value = std::to_string(v.local);
      row.witness = "line at (" + rat_str(v.vertex.x) + "," + rat_str(v.vertex.y) +
                    ") under [[" + std::to_string(v.psi.a) + "," +
                    std::to_string(v.psi.b) + "],[" + std::to_string(v.psi.c) + "," +
                    std::to_string(v.psi.d) + "]]";
      cert.verdict = "refuted";
    }
  }
  cert.checks.push_back(row);
  return cert;
}

int verdict_exit(const std::string& verdict) {
  if (verdict == "consistent") return 0;
  if (verdict == "refuted") return 1;
  return 3;
}

std::string cert_text(const Certificate& cert, bool color) {
  std::ostringstream out;
  const char* code = cert.verdict == "consistent"  ? "32"
                     : cert.verdict == "refuted"   ? "31"
                                                   : "33";
  out << "verdict: " << colored(cert.verdict, code, color) << "\n";
  for (const CheckRow& r : cert.checks) {
    out << "  " << r.name << ": " << r.status;
    if (!r.value.empty()) out << "  value " << r.value;
    if (!r.bound.empty()) out << "  bound " << r.bound;
    if (!r.witness.empty()) out << "  (" << r.witness << ")";
    out << "\n";
  }
  return out.str();
}

struct Options {
  std::string file, file_b, out, format, point_s, at_s, batch;
  long m = 1, bound = 2;
  long seed = 0;
};

int cmd_tropicalize(const Options& o, const std::string& default_format) {
  Tropicalization t = tropicalize(load_polynomial(o.file));
  std::string format = o.format.empty() ? default_format : o.format;
  emit(o.out, render_tropicalization(t, format));
  return 0;
}

int analyze_file(const std::string& path, const Options& o, std::string* verdict) {
  LaurentPolynomial f = load_polynomial(path);
  RatPt P = parse_point_arg(o.point_s);
  Certificate cert = analyze_one(f, P, o.m, o.bound);
  *verdict = cert.verdict;
  std::string format = o.format.empty() ? "json" : o.format;
  if (!o.batch.empty()) {
    std::filesystem::path p(path);
    p.replace_extension(".cert.json");
    emit(p.string(), dump_json(certificate_to_json(cert)));
    return verdict_exit(cert.verdict);
  }
  if (format == "text")
    emit(o.out, cert_text(cert, use_color(o.out)));
  else
    emit(o.out, dump_json(certificate_to_json(cert)));
  return verdict_exit(cert.verdict);
}

int cmd_analyze(const Options& o) {
  if (o.batch.empty()) {
    std::string verdict;
    return analyze_file(o.file, o, &verdict);
  }
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(o.batch, ec))
    if (entry.path().extension() == ".txt") files.push_back(entry.path().string());
  if (ec) throw InputError("cannot read directory " + o.batch);
  std::sort(files.begin(), files.end());
  bool any_refuted = false, any_error = false, any_inconclusive = false;
  for (const std::string& f : files) {
    std::string verdict;
    try {
      analyze_file(f, o, &verdict);
    } catch (const InputError& e) {
      any_error = true;
      std::cout << std::filesystem::path(f).filename().string() << ": error ("
                << e.what() << ")\n";
      continue;
    }
    if (verdict == "refuted") any_refuted = true;
    if (verdict != "refuted" && verdict != "consistent") any_inconclusive = true;
    std::cout << std::filesystem::path(f).filename().string() << ": " << verdict
              << "\n";
  }
  if (any_refuted) return 1;
  if (any_error) return 2;
  if (any_inconclusive) return 3;
  return 0;
}

int cmd_mult(const Options& o) {
  LaurentPolynomial f = load_polynomial(o.file);
  long mu;
  if (o.at_s.empty()) {
    mu = multiplicity_at_one(f);
  } else {
    auto comma = o.at_s.find(',');
    if (comma == std::string::npos) throw InputError("--at expects expr,expr");
    auto scalar = [&](const std::string& text) {
      LaurentPolynomial g;
      try {
        g = parse_polynomial(text);
      } catch (const ParseError& e) {
        throw InputError("--at: " + std::string(e.what()));
      }
      PuiseuxScalar s;
      for (const auto& [p, c] : g.monomials()) {
        if (p != Pt{0, 0}) throw InputError("--at components must not involve x or y");
        s = c;
      }
      return s;
    };
    PuiseuxScalar p1 = scalar(o.at_s.substr(0, comma));
    PuiseuxScalar p2 = scalar(o.at_s.substr(comma + 1));
    if (p1.is_zero() || p2.is_zero()) throw InputError("--at point must be nonzero");
    mu = multiplicity_at(f, p1, p2);
  }
  std::string format = o.format.empty() ? "text" : o.format;
  if (format == "json")
    emit(o.out, dump_json(json{{"multiplicity", mu}}));
  else
    emit(o.out, std::to_string(mu) + "\n");
  return 0;
}

int cmd_width(const Options& o) {
  std::vector<Pt> pts = load_polygon(o.file);
  if (pts.empty()) throw InputError("empty polygon");
  WidthResult w = minimal_lattice_width(pts);
  std::string format = o.format.empty() ? "text" : o.format;
  if (format == "json")
    emit(o.out, dump_json(json{{"width", w.width},
                               {"direction", {w.witness.x, w.witness.y}}}));
  else
    emit(o.out, std::to_string(w.width) + " in direction " + dir_str(w.witness) + "\n");
  return 0;
}

int cmd_thick(const Options& o) {
  std::vector<Pt> pts = load_polygon(o.file);
  ThickResult r = is_m_thick(pts, o.m);
  std::string format = o.format.empty() ? "text" : o.format;
  if (format == "json") {
    json j{{"m", o.m}, {"thick", r.thick}};
    if (r.witness) j["witness"] = {r.witness->x, r.witness->y};
    emit(o.out, dump_json(j));
  } else {
    std::string line = std::string("m-thick: ") + (r.thick ? "true" : "false");
    if (r.witness) line += " (direction " + dir_str(*r.witness) + ")";
    emit(o.out, line + "\n");
  }
  return 0;
}

int cmd_stable(const Options& o) {
  Tropicalization a = tropicalize(load_polynomial(o.file));
  Tropicalization b = tropicalize(load_polynomial(o.file_b));
  if (a.degenerate || b.degenerate)
    throw InputError("stable intersection needs 2-dimensional Newton polygons");
  StableResult r = stable_intersection(a.curve, b.curve);
  std::string format = o.format.empty() ? "json" : o.format;
  if (format == "text") {
    std::ostringstream out;
    out << "total: " << r.total << "\n";
    for (const WeightedPoint& w : r.points)
      out << "  (" << rat_str(w.point.x) << "," << rat_str(w.point.y) << ") mult "
          << w.mult << " component " << w.component << "\n";
    emit(o.out, out.str());
  } else {
    emit(o.out, dump_json(intersection_to_json(r)));
  }
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"tropigon: tropical curves, Newton subdivisions, and multiplicity "
               "certificates over generalized Puiseux series"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json|svg|text");
    c->add_option("--out", o.out, "write output to a file instead of stdout");
    c->add_option("--seed", o.seed, "seed for randomized modes (none currently)");
  };

  CLI::App* trop = app.add_subcommand("tropicalize", "subdivision and dual curve");
  trop->add_option("file", o.file, "polynomial file")->required();
  add_common(trop);

  CLI::App* render = app.add_subcommand("render", "tropicalize with SVG output");
  render->add_option("file", o.file, "polynomial file")->required();
  add_common(render);

  CLI::App* analyze = app.add_subcommand("analyze", "m-fold point certificate");
  analyze->add_option("file", o.file, "polynomial file");
  analyze->add_option("--point", o.point_s, "p/q,p/q")->required();
  analyze->add_option("--m", o.m, "target multiplicity")->required();
  analyze->add_option("--bound", o.bound, "line enumeration bound");
  analyze->add_option("--batch", o.batch, "analyze every *.txt in a directory");
  add_common(analyze);

  CLI::App* mult = app.add_subcommand("mult", "multiplicity at a point");
  mult->add_option("file", o.file, "polynomial file")->required();
  mult->add_option("--at", o.at_s, "point as two scalar expressions, default 1,1");
  add_common(mult);

  CLI::App* width = app.add_subcommand("width", "minimal lattice width");
  width->add_option("file", o.file, "polygon JSON or polynomial file")->required();
  add_common(width);

  CLI::App* thick = app.add_subcommand("thick", "m-thickness");
  thick->add_option("file", o.file, "polygon JSON or polynomial file")->required();
  thick->add_option("--m", o.m, "thickness level")->required();
  add_common(thick);

  CLI::App* stable = app.add_subcommand("stable", "stable intersection of two curves");
  stable->add_option("file_a", o.file, "first polynomial file")->required();
  stable->add_option("file_b", o.file_b, "second polynomial file")->required();
  add_common(stable);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (trop->parsed()) return cmd_tropicalize(o, "json");
    if (render->parsed()) return cmd_tropicalize(o, "svg");
    if (analyze->parsed()) {
      if (o.batch.empty() && o.file.empty()) throw InputError("missing input file");
      return cmd_analyze(o);
    }
    if (mult->parsed()) return cmd_mult(o);
    if (width->parsed()) return cmd_width(o);
    if (thick->parsed()) return cmd_thick(o);
    if (stable->parsed()) return cmd_stable(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace tropigon
