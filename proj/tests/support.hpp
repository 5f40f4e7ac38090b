#pragma once

#include <cstdint>
#include <random>

#include "puiseux/polygon.hpp"

namespace puiseux::testing {

/// Small deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  long integer(long lo, long hi) {
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rat rational(long mag, long max_den) {
    return Rat(integer(-mag, mag), integer(1, max_den));
  }
  Rat nonzero(long mag, long max_den) {
    Rat r;
    while (r.is_zero()) r = rational(mag, max_den);
    return r;
  }

  /// Up to `terms` terms, x-exponents on the grid 1/ram in [0, max_ex],
  /// y-exponents in [0, max_ey].
  PuiseuxPoly poly(int terms, long ram, long max_ex, unsigned max_ey) {
    PuiseuxPoly p(ram);
    for (int k = 0; k < terms; ++k)
      p.add_term(Rat(integer(0, max_ex * ram), ram), static_cast<unsigned>(integer(0, max_ey)),
                 nonzero(5, 3));
    return p;
  }

  /// Integer-exponent polynomial without constant term.
  PuiseuxPoly singular_poly(int terms, long max_ex, unsigned max_ey) {
    PuiseuxPoly p = poly(terms, 1, max_ex, max_ey);
    p.add_term(0, 0, -p.coeff(0, 0));
    return p;
  }

  std::vector<CloudPoint> cloud(int size, long den) {
    std::vector<CloudPoint> pts;
    for (int k = 0; k < size; ++k)
      pts.push_back({Rat(integer(-den, 6 * den), den), static_cast<unsigned>(integer(0, 6))});
    return pts;
  }

 private:
  std::mt19937_64 eng_;
};

inline PuiseuxPoly poly_of(std::initializer_list<std::tuple<Rat, Rat, unsigned>> terms) {
  PuiseuxPoly p;
  for (const auto& [c, ex, ey] : terms) p.add_term(ex, ey, c);
  return p;
}

}  // namespace puiseux::testing
