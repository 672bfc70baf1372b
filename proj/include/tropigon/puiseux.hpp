#pragma once

#include <map>
#include <vector>

#include "tropigon/rational.hpp"

namespace tropigon {

// Finite generalized Puiseux series: a finite sum of terms c * t^e with
// rational exponent e and nonzero rational coefficient c. The zero series
// has an empty term map.
class PuiseuxScalar {
 public:
  PuiseuxScalar() = default;
  explicit PuiseuxScalar(const Rat& c) {
    if (c != 0) terms_[Rat(0)] = c;
  }
  PuiseuxScalar(const Rat& c, const Rat& e) {
    if (c != 0) terms_[e] = c;
  }
  static PuiseuxScalar t() { return PuiseuxScalar(Rat(1), Rat(1)); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Rat, Rat>& terms() const { return terms_; }

  // val(sum c_e t^e) = -min{e : c_e != 0}; val(0) = -infinity (nullopt).
  std::optional<Rat> valuation() const;

  // The term with the least exponent; zero for the zero series.
  PuiseuxScalar leading_term() const;

  bool is_monomial() const { return terms_.size() == 1; }
  // Inverse of a single-term series. Throws for anything else: a general
  // finite series has an infinite inverse, which this model cannot hold.
  PuiseuxScalar inverse() const;

  // Integer power; negative exponents require a monomial.
  PuiseuxScalar pow(long n) const;

  PuiseuxScalar operator-() const;
  PuiseuxScalar& operator+=(const PuiseuxScalar& o);
  PuiseuxScalar& operator-=(const PuiseuxScalar& o);
  PuiseuxScalar& operator*=(const PuiseuxScalar& o);
  friend PuiseuxScalar operator+(PuiseuxScalar a, const PuiseuxScalar& b) {
    a += b;
    return a;
  }
  friend PuiseuxScalar operator-(PuiseuxScalar a, const PuiseuxScalar& b) {
    a -= b;
    return a;
  }
  friend PuiseuxScalar operator*(const PuiseuxScalar& a, const PuiseuxScalar& b);
  bool operator==(const PuiseuxScalar& o) const { return terms_ == o.terms_; }

  // Accumulates c * t^e, erasing the entry if the sum cancels.
  void add_term(const Rat& e, const Rat& c);

 private:
  std::map<Rat, Rat> terms_;  // exponent -> coefficient
};

std::string to_string(const PuiseuxScalar& s);

// Leading-term representatives, one per input scalar (zeros stay zero).
std::vector<PuiseuxScalar> representatives(const std::vector<PuiseuxScalar>& xs);

}  // namespace tropigon
