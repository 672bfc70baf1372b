#include "tropigon/laurent.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace tropigon {

Mat2 Mat2::inverse() const {
  long s = det();
  if (s != 1 && s != -1) throw std::domain_error("Mat2::inverse: matrix is not unimodular");
  return {d * s, -b * s, -c * s, a * s};
}

Mat2 Mat2::inv_transpose() const {
  Mat2 inv = inverse();
  return {inv.a, inv.c, inv.b, inv.d};
}

void LaurentPolynomial::add_monomial(Pt ij, const PuiseuxScalar& c) {
  if (c.is_zero()) return;
  auto it = coef_.find(ij);
  if (it == coef_.end()) {
    coef_[ij] = c;
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coef_.erase(it);
}

const PuiseuxScalar* LaurentPolynomial::coefficient(Pt ij) const {
  auto it = coef_.find(ij);
  return it == coef_.end() ? nullptr : &it->second;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r;
  for (const auto& [ij, c] : coef_) r.coef_[ij] = -c;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [ij, c] : o.coef_) add_monomial(ij, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [ij, c] : o.coef_) add_monomial(ij, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  for (const auto& [pa, ca] : a.coef_)
    for (const auto& [pb, cb] : b.coef_)
      r.add_monomial({pa.x + pb.x, pa.y + pb.y}, ca * cb);
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(long n) const {
  if (n < 0) {
    if (coef_.size() != 1)
      throw std::domain_error("LaurentPolynomial::pow: negative power of a non-monomial");
    const auto& [ij, c] = *coef_.begin();
    LaurentPolynomial inv;
    inv.add_monomial({-ij.x, -ij.y}, c.inverse());
    return inv.pow(-n);
  }
  LaurentPolynomial acc;
  acc.add_monomial({0, 0}, PuiseuxScalar(Rat(1)));
  LaurentPolynomial base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

namespace {

enum class Tok { Num, T, X, Y, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t k = 0;
  while (k < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[k]))) {
      ++k;
      continue;
    }
    size_t p = k;
    char ch = s[k];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t e = k;
      while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
      out.push_back({Tok::Num, s.substr(k, e - k), p});
      k = e;
      continue;
    }
    Tok t;
    switch (ch) {
      case 't': t = Tok::T; break;
      case 'x': t = Tok::X; break;
      case 'y': t = Tok::Y; break;
      case '+': t = Tok::Plus; break;
      case '-': t = Tok::Minus; break;
      case '*': t = Tok::Star; break;
      case '/': t = Tok::Slash; break;
      case '^': t = Tok::Caret; break;
      case '(': t = Tok::LParen; break;
      case ')': t = Tok::RParen; break;
      default:
        throw ParseError(p, std::string("unexpected character '") + ch + "'");
    }
    out.push_back({t, std::string(1, ch), p});
    ++k;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

struct Parser {
  std::vector<Token> toks;
  size_t k = 0;

  const Token& peek() const { return toks[k]; }
  Token eat() { return toks[k++]; }
  Token expect(Tok t, const char* what) {
    if (peek().kind != t) throw ParseError(peek().pos, std::string("expected ") + what);
    return eat();
  }

  static bool starts_factor(Tok t) {
    return t == Tok::Num || t == Tok::T || t == Tok::X || t == Tok::Y || t == Tok::LParen;
  }

  LaurentPolynomial parse_expr() {
    int sign = 1;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      if (eat().kind == Tok::Minus) sign = -1;
    }
    LaurentPolynomial acc = parse_term();
    if (sign < 0) acc = -acc;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = eat().kind == Tok::Minus;
      LaurentPolynomial rhs = parse_term();
      if (minus)
        acc -= rhs;
      else
        acc += rhs;
    }
    return acc;
  }

  LaurentPolynomial parse_term() {
    LaurentPolynomial acc = parse_factor();
    for (;;) {
      if (peek().kind == Tok::Star) {
        eat();
        acc = acc * parse_factor();
      } else if (starts_factor(peek().kind)) {
        acc = acc * parse_factor();  // juxtaposition
      } else {
        break;
      }
    }
    return acc;
  }

  LaurentPolynomial parse_factor() {
    LaurentPolynomial base = parse_atom();
    if (peek().kind == Tok::Caret) {
      size_t p = eat().pos;
      Rat e = parse_exponent();
      base = pow_rat(base, e, p);
    }
    return base;
  }

  LaurentPolynomial parse_atom() {
    const Token& tk = peek();
    LaurentPolynomial p;
    switch (tk.kind) {
      case Tok::Num: {
        std::string num = eat().text;
        if (peek().kind == Tok::Slash) {
          eat();
          Token den = expect(Tok::Num, "digits after '/'");
          if (Rat(den.text) == 0) throw ParseError(den.pos, "zero denominator");
          num += "/" + den.text;
        }
        Rat r(num);
        r.canonicalize();
        p.add_monomial({0, 0}, PuiseuxScalar(r));
        return p;
      }
      case Tok::T:
        eat();
        p.add_monomial({0, 0}, PuiseuxScalar::t());
        return p;
      case Tok::X:
        eat();
        p.add_monomial({1, 0}, PuiseuxScalar(Rat(1)));
        return p;
      case Tok::Y:
        eat();
        p.add_monomial({0, 1}, PuiseuxScalar(Rat(1)));
        return p;
      case Tok::LParen: {
        eat();
        LaurentPolynomial inner = parse_expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        throw ParseError(tk.pos, "expected a factor");
    }
  }

  Rat parse_exponent() {
    bool paren = false;
    if (peek().kind == Tok::LParen) {
      paren = true;
      eat();
    }
    int sign = 1;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      if (eat().kind == Tok::Minus) sign = -1;
    }
    Token num = expect(Tok::Num, "digits in exponent");
    std::string text = num.text;
    if (peek().kind == Tok::Slash) {
      eat();
      Token den = expect(Tok::Num, "digits after '/'");
      if (Rat(den.text) == 0) throw ParseError(den.pos, "zero denominator");
      text += "/" + den.text;
    }
    if (paren) expect(Tok::RParen, "')'");
    Rat e(text);
    e.canonicalize();
    if (sign < 0) e = -e;
    return e;
  }

  static LaurentPolynomial pow_rat(const LaurentPolynomial& base, const Rat& e, size_t pos) {
    if (e.get_den() == 1) {
      if (!e.get_num().fits_slong_p()) throw ParseError(pos, "exponent out of range");
      long n = e.get_num().get_si();
      try {
        return base.pow(n);
      } catch (const std::domain_error& err) {
        throw ParseError(pos, err.what());
      }
    }
    // Fractional exponent: base must be a pure power of t.
    if (base.monomials().size() == 1) {
      const auto& [ij, c] = *base.monomials().begin();
      if (ij == Pt{0, 0} && c.is_monomial()) {
        const auto& [te, tc] = *c.terms().begin();
        if (tc == 1) {
          Rat ne = te * e;
          LaurentPolynomial p;
          p.add_monomial({0, 0}, PuiseuxScalar(Rat(1), ne));
          return p;
        }
      }
    }
    throw ParseError(pos, "fractional exponent on a base that is not a power of t");
  }
};

}  // namespace

LaurentPolynomial parse_polynomial(const std::string& text) {
  Parser p{lex(text)};
  if (p.peek().kind == Tok::End) throw ParseError(0, "empty input");
  LaurentPolynomial r = p.parse_expr();
  if (p.peek().kind != Tok::End) throw ParseError(p.peek().pos, "trailing input");
  return r;
}

std::string to_string(const LaurentPolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [ij, c] : f.monomials()) {
    bool neg = false;
    std::string coef;
    bool coef_is_one = false;
    if (c.terms().size() == 1) {
      const auto& [e, q] = *c.terms().begin();
      neg = q < 0;
      Rat mag = abs(q);
      std::ostringstream cs;
      if (e == 0) {
        if (mag == 1 && (ij.x != 0 || ij.y != 0))
          coef_is_one = true;
        else
          cs << mag.get_str();
      } else {
        if (mag != 1) cs << mag.get_str() << "*";
        cs << "t";
        if (e != 1) cs << "^" << e.get_str();
      }
      coef = cs.str();
    } else {
      coef = "(" + to_string(c) + ")";
    }
    std::vector<std::string> parts;
    if (!coef_is_one && !coef.empty()) parts.push_back(coef);
    if (ij.x != 0) parts.push_back(ij.x == 1 ? "x" : "x^" + std::to_string(ij.x));
    if (ij.y != 0) parts.push_back(ij.y == 1 ? "y" : "y^" + std::to_string(ij.y));
    if (parts.empty()) parts.push_back("1");
    std::string body;
    for (size_t k = 0; k < parts.size(); ++k) {
      if (k) body += "*";
      body += parts[k];
    }
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    out << body;
  }
  return out.str();
}

namespace {

Rat binom(long n, long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(b);
}

}  // namespace

long multiplicity_at_one(const LaurentPolynomial& f) {
  if (f.is_zero()) throw std::domain_error("multiplicity_at_one: zero polynomial");
  long mi = 0, mj = 0;
  bool init = false;
  for (const auto& [ij, c] : f.monomials()) {
    if (!init) {
      mi = ij.x;
      mj = ij.y;
      init = true;
    } else {
      mi = std::min(mi, ij.x);
      mj = std::min(mj, ij.y);
    }
  }
  long maxdeg = 0;
  for (const auto& [ij, c] : f.monomials())
    maxdeg = std::max(maxdeg, (ij.x - mi) + (ij.y - mj));
  // Coefficient of u^a v^b in f(1+u, 1+v) x^-mi y^-mj is
  // sum over support of a_ij * C(i-mi, a) * C(j-mj, b).
  for (long d = 0; d <= maxdeg; ++d) {
    for (long a = 0; a <= d; ++a) {
      long b = d - a;
      PuiseuxScalar s;
      for (const auto& [ij, c] : f.monomials()) {
        long I = ij.x - mi, J = ij.y - mj;
        if (I < a || J < b) continue;
        Rat w = binom(I, a) * binom(J, b);
        s += c * PuiseuxScalar(w);
      }
      if (!s.is_zero()) return d;
    }
  }
  throw std::logic_error("multiplicity_at_one: nonzero polynomial with no nonzero coefficient");
}

LaurentPolynomial monomial_transform(const LaurentPolynomial& f, const Mat2& m) {
  long dt = m.det();
  if (dt != 1 && dt != -1)
    throw std::domain_error("monomial_transform: matrix is not unimodular");
  LaurentPolynomial r;
  for (const auto& [ij, c] : f.monomials()) r.add_monomial(m.apply(ij), c);
  return r;
}

LaurentPolynomial scale_transform(const LaurentPolynomial& f, const PuiseuxScalar& r,
                                  const PuiseuxScalar& q) {
  if (r.is_zero() || q.is_zero()) throw std::domain_error("scale_transform: zero scale");
  LaurentPolynomial out;
  for (const auto& [ij, c] : f.monomials()) {
    PuiseuxScalar scaled = c * r.pow(ij.x) * q.pow(ij.y);
    out.add_monomial(ij, scaled);
  }
  return out;
}

long multiplicity_at(const LaurentPolynomial& f, const PuiseuxScalar& p1,
                          const PuiseuxScalar& p2) {
  return multiplicity_at_one(scale_transform(f, p1, p2));
}

}  // namespace tropigon
