#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>

#include "tropigon/lattice.hpp"
#include "tropigon/puiseux.hpp"

namespace tropigon {

// 2x2 integer matrix acting on exponent vectors (i,j) = (x,y) by rows:
// (i,j) -> (a i + b j, c i + d j).
struct Mat2 {
  long a = 1, b = 0, c = 0, d = 1;
  long det() const { return a * d - b * c; }
  Pt apply(Pt p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
  // Composition: (this * o).apply(p) == this->apply(o.apply(p)).
  Mat2 mul(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 inverse() const;        // requires |det| == 1
  Mat2 inv_transpose() const;  // requires |det| == 1
  bool operator==(const Mat2&) const = default;
};

// Laurent polynomial in x, y over the finite Puiseux scalars.
// Invariant: no zero coefficients in the map.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  bool is_zero() const { return coef_.empty(); }
  const std::map<Pt, PuiseuxScalar>& monomials() const { return coef_; }

  void add_monomial(Pt ij, const PuiseuxScalar& c);
  const PuiseuxScalar* coefficient(Pt ij) const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    a += b;
    return a;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    a -= b;
    return a;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  // Integer power; negative exponents require a one-monomial polynomial with
  // an invertible (single-term) coefficient.
  LaurentPolynomial pow(long n) const;

  bool operator==(const LaurentPolynomial& o) const { return coef_ == o.coef_; }

 private:
  std::map<Pt, PuiseuxScalar> coef_;
};

struct ParseError : std::runtime_error {
  size_t pos;  // 1-based column of the offending character
  ParseError(size_t offset, const std::string& msg)
      : std::runtime_error(msg + " at position " + std::to_string(offset + 1)),
        pos(offset + 1) {}
};

// Grammar: a sum of signed terms; a term is a product (explicit '*' or
// juxtaposition) of factors; a factor is a rational literal p[/q], one of
// t, x, y, or a parenthesized sum, optionally raised by '^' to an integer
// (rational for t; any rational for invertible monomial bases).
LaurentPolynomial parse_polynomial(const std::string& text);

// Canonical form: terms ordered by (i, j); multi-term coefficients
// parenthesized with ascending t-exponents. parse(to_string(f)) == f.
std::string to_string(const LaurentPolynomial& f);

// Order of vanishing of f(1+u, 1+v) after clearing negative exponents by a
// monomial factor. Throws on the zero polynomial.
long multiplicity_at_one(const LaurentPolynomial& f);

// Support remapped by m; the coefficient of (i,j) moves to m(i,j).
LaurentPolynomial monomial_transform(const LaurentPolynomial& f, const Mat2& m);

// Substitution x -> r x, y -> q y. r, q nonzero; negative support exponents
// need the corresponding scalar to be a monomial.
LaurentPolynomial scale_transform(const LaurentPolynomial& f, const PuiseuxScalar& r,
                                  const PuiseuxScalar& q);

long multiplicity_at(const LaurentPolynomial& f, const PuiseuxScalar& p1,
                          const PuiseuxScalar& p2);

}  // namespace tropigon
