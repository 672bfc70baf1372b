#include "tropigon/puiseux.hpp"

#include <sstream>

namespace tropigon {

std::optional<Rat> PuiseuxScalar::valuation() const {
  if (terms_.empty()) return std::nullopt;
  Rat v = -terms_.begin()->first;
  return v;
}

PuiseuxScalar PuiseuxScalar::leading_term() const {
  if (terms_.empty()) return {};
  const auto& [e, c] = *terms_.begin();
  return PuiseuxScalar(c, e);
}

PuiseuxScalar PuiseuxScalar::inverse() const {
  if (terms_.size() != 1)
    throw std::domain_error("PuiseuxScalar::inverse: only single-term series are invertible");
  const auto& [e, c] = *terms_.begin();
  Rat ic = 1 / c;
  Rat ie = -e;
  return PuiseuxScalar(ic, ie);
}

PuiseuxScalar PuiseuxScalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  PuiseuxScalar acc(Rat(1));
  PuiseuxScalar base = *this;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

PuiseuxScalar PuiseuxScalar::operator-() const {
  PuiseuxScalar r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

void PuiseuxScalar::add_term(const Rat& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

PuiseuxScalar& PuiseuxScalar::operator+=(const PuiseuxScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PuiseuxScalar& PuiseuxScalar::operator-=(const PuiseuxScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

PuiseuxScalar operator*(const PuiseuxScalar& a, const PuiseuxScalar& b) {
  PuiseuxScalar r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Rat e = ea + eb;
      Rat c = ca * cb;
      r.add_term(e, c);
    }
  return r;
}

PuiseuxScalar& PuiseuxScalar::operator*=(const PuiseuxScalar& o) {
  *this = *this * o;
  return *this;
}

std::string to_string(const PuiseuxScalar& s) {
  if (s.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    Rat mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool need_num = (mag != 1) || (e == 0);
    if (need_num) out << mag.get_str();
    if (e != 0) {
      if (need_num) out << "*";
      out << "t";
      if (e != 1) out << "^" << e.get_str();
    }
  }
  return out.str();
}

std::vector<PuiseuxScalar> representatives(const std::vector<PuiseuxScalar>& xs) {
  std::vector<PuiseuxScalar> r;
  r.reserve(xs.size());
  for (const auto& x : xs) r.push_back(x.leading_term());
  return r;
}

}  // namespace tropigon
