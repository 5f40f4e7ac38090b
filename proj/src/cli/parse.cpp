#include "puiseux/cli/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace puiseux::cli {

ParseError::ParseError(std::size_t pos, const std::string& what)
    : Error("column " + std::to_string(pos + 1) + ": " + what), pos_(pos), reason_(what) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  PuiseuxPoly run() {
    skip();
    if (pos_ == s_.size()) return PuiseuxPoly();
    PuiseuxPoly p = expr();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(start, "expected an integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  unsigned exponent() {
    const std::size_t at = (skip(), pos_);
    const mpz_class e = integer();
    if (!e.fits_uint_p() || e > 1000) throw ParseError(at, "exponent too large");
    return static_cast<unsigned>(e.get_ui());
  }

  PuiseuxPoly expr() {
    PuiseuxPoly sum;
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    while (true) {
      PuiseuxPoly t = term();
      if (negate) sum -= t; else sum += t;
      if (eat('+'))
        negate = false;
      else if (eat('-'))
        negate = true;
      else
        return sum;
    }
  }

  bool atom_starts() {
    const char c = peek();
    return c == 'x' || c == 'y' || c == '(';
  }

  PuiseuxPoly term() {
    const std::size_t start = (skip(), pos_);
    PuiseuxPoly p = PuiseuxPoly::constant(1);
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const mpz_class num = integer();
      mpz_class den = 1;
      if (eat('/')) {
        const std::size_t at = (skip(), pos_);
        den = integer();
        if (den == 0) throw ParseError(at, "zero denominator");
      }
      p = PuiseuxPoly::constant(Rat(num, den));
      any = true;
    }
    while (true) {
      if (peek() == '*') {
        if (!any) throw ParseError(pos_, "'*' needs a factor on its left");
        ++pos_;
        if (!atom_starts()) throw ParseError(pos_, "expected x, y or '(' after '*'");
      } else if (!atom_starts()) {
        break;
      }
      p = p * atom();
      any = true;
    }
    if (!any) {
      skip();
      throw ParseError(start, pos_ < s_.size() ? std::string("unexpected '") + s_[pos_] + "'"
                                               : "expected a term");
    }
    return p;
  }

  PuiseuxPoly atom() {
    PuiseuxPoly base;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      base = expr();
      if (!eat(')')) throw ParseError(pos_, "expected ')'");
    } else {
      ++pos_;
      base = c == 'x' ? PuiseuxPoly::x() : PuiseuxPoly::y();
    }
    if (eat('^')) return base.pow(exponent());
    return base;
  }
};

void put_power(std::ostream& os, char var, const Rat& e) {
  os << var;
  if (e != Rat(1)) os << '^' << e;
}

}  // namespace

PuiseuxPoly parse_poly(std::string_view text) { return Parser(text).run(); }

OneForm parse_form(std::string_view a_text, std::string_view b_text) {
  OneForm w;
  try {
    w.a = parse_poly(a_text);
  } catch (const ParseError& e) {
    throw ParseError(e.pos(), "in a: " + e.reason());
  }
  try {
    w.b = parse_poly(b_text);
  } catch (const ParseError& e) {
    throw ParseError(e.pos(), "in b: " + e.reason());
  }
  if (w.is_zero()) throw Error("the form is zero");
  if (w.a.has_constant_term()) throw Error("not singular: a(0,0) != 0");
  if (w.b.has_constant_term()) throw Error("not singular: b(0,0) != 0");
  return w;
}

std::string format_poly(const PuiseuxPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest total degree first, then by powers of y
  std::vector<std::pair<Monomial, Rat>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    const Rat dl = l.first.ex + Rat(l.first.ey), dr = r.first.ex + Rat(r.first.ey);
    if (dl != dr) return dl > dr;
    return l.first.ey > r.first.ey;
  });
  for (const auto& [m, coeff] : terms) {
    const Rat mag = coeff.abs();
    if (first)
      os << (coeff.sign() < 0 ? "-" : "");
    else
      os << (coeff.sign() < 0 ? " - " : " + ");
    first = false;
    const bool constant = m.ex.is_zero() && m.ey == 0;
    bool need_star = false;
    if (mag != Rat(1) || constant) {
      os << mag;
      need_star = true;
    }
    if (!m.ex.is_zero()) {
      if (need_star) os << '*';
      put_power(os, 'x', m.ex);
      need_star = true;
    }
    if (m.ey > 0) {
      if (need_star) os << '*';
      put_power(os, 'y', Rat(static_cast<long>(m.ey)));
    }
  }
  return os.str();
}

}  // namespace puiseux::cli
