#include "tropigon/rational.hpp"

#include <cctype>

namespace tropigon {

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat rat_parse(const std::string& s) {
  size_t k = 0;
  auto digits = [&](size_t from) {
    size_t n = from;
    while (n < s.size() && std::isdigit(static_cast<unsigned char>(s[n]))) ++n;
    return n;
  };
  if (k < s.size() && (s[k] == '-' || s[k] == '+')) ++k;
  size_t num_end = digits(k);
  if (num_end == k) throw std::invalid_argument("bad rational: " + s);
  k = num_end;
  if (k < s.size()) {
    if (s[k] != '/') throw std::invalid_argument("bad rational: " + s);
    size_t den_end = digits(k + 1);
    if (den_end == k + 1 || den_end != s.size())
      throw std::invalid_argument("bad rational: " + s);
  }
  Rat r(s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

}  // namespace tropigon
