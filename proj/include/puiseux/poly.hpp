#pragma once

#include <compare>
#include <cstddef>
#include <map>

#include "puiseux/rat.hpp"

namespace puiseux {

/// x^ex y^ey with a rational x-exponent.
struct Monomial {
  Rat ex;
  unsigned ey = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;
};

/// Finite sum of c * x^ex * y^ey with rational coefficients and rational
/// x-exponents. Coefficients stored are never zero, and the denominator of
/// every x-exponent divides ram().
class PuiseuxPoly {
 public:
  using TermMap = std::map<Monomial, Rat>;

  PuiseuxPoly() = default;
  explicit PuiseuxPoly(long ram);

  static PuiseuxPoly constant(const Rat& c);
  static PuiseuxPoly monomial(const Rat& coeff, const Rat& ex, unsigned ey);
  static PuiseuxPoly x() { return monomial(1, 1, 0); }
  static PuiseuxPoly y() { return monomial(1, 0, 1); }

  /// Adds coeff * x^ex y^ey, erasing the entry if it cancels. Grows ram to
  /// cover the exponent's denominator.
  void add_term(const Rat& ex, unsigned ey, const Rat& coeff);
  /// ram becomes lcm(ram, n).
  void raise_ram(long n);

  Rat coeff(const Rat& ex, unsigned ey) const;
  const TermMap& terms() const { return terms_; }
  long ram() const { return ram_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool has_integer_exponents() const;
  bool has_constant_term() const { return !coeff(0, 0).is_zero(); }
  unsigned degree_y() const;

  PuiseuxPoly operator-() const;
  PuiseuxPoly& operator+=(const PuiseuxPoly& o);
  PuiseuxPoly& operator-=(const PuiseuxPoly& o);
  PuiseuxPoly& operator*=(const Rat& c);
  friend PuiseuxPoly operator+(PuiseuxPoly a, const PuiseuxPoly& b) { return a += b; }
  friend PuiseuxPoly operator-(PuiseuxPoly a, const PuiseuxPoly& b) { return a -= b; }
  friend PuiseuxPoly operator*(PuiseuxPoly a, const Rat& c) { return a *= c; }
  friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);

  PuiseuxPoly pow(unsigned n) const;

  friend bool operator==(const PuiseuxPoly&, const PuiseuxPoly&) = default;

 private:
  TermMap terms_;
  long ram_ = 1;
};

/// Minimum of ex + ey over the terms; infinite for the zero polynomial.
Valuation order(const PuiseuxPoly& p);

/// p(x, c x^mu + y), expanded and reduced. The result's ram is
/// lcm(p.ram, den(mu)); c = 0 returns p itself. Requires mu >= 1.
PuiseuxPoly substitute_shift(const PuiseuxPoly& p, const Rat& c, const Rat& mu);

/// Exact value of p at x = t0^ram, y = y0 with ram = p.ram().
Rat eval_ramified(const PuiseuxPoly& p, const Rat& t0, const Rat& y0);
/// Same, with an explicit ram that must be a multiple of p.ram().
Rat eval_ramified(const PuiseuxPoly& p, const Rat& t0, const Rat& y0, long ram);

/// Binomial coefficient as a rational.
Rat binomial(unsigned n, unsigned k);

}  // namespace puiseux
