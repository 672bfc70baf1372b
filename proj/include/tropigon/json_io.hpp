#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tropigon/curve.hpp"
#include "tropigon/intersect.hpp"
#include "tropigon/laurent.hpp"
#include "tropigon/singular.hpp"

namespace tropigon {

using nlohmann::json;

// {"monomials":[{"i":int,"j":int,"coef":[{"exp":"p/q","val":"p/q"},...]},...]}
json polynomial_to_json(const LaurentPolynomial& f);

// {"points":[[i,j],...]}
json polygon_to_json(const std::vector<Pt>& pts);
std::vector<Pt> polygon_from_json(const json& j);

json tropicalization_to_json(const Subdivision& sub, const TropicalCurve* curve);

json certificate_to_json(const Certificate& cert);

// [{"point":["p/q","p/q"],"mult":int,"component":int},...]
json intersection_to_json(const StableResult& r);

std::string dump_json(const json& j);

}  // namespace tropigon
