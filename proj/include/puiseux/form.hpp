#pragma once

#include "puiseux/poly.hpp"

namespace puiseux {

/// The 1-form a(x,y) dx + b(x,y) dy.
struct OneForm {
  PuiseuxPoly a;
  PuiseuxPoly b;

  /// lcm of the two coefficient rams.
  long ram() const { return lcm_checked(a.ram(), b.ram()); }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  /// a(0,0) = b(0,0) = 0.
  bool is_singular() const { return !a.has_constant_term() && !b.has_constant_term(); }
  bool has_integer_exponents() const {
    return a.has_integer_exponents() && b.has_integer_exponents();
  }

  friend bool operator==(const OneForm&, const OneForm&) = default;
};

/// Pullback of w under y = c x^mu + y':
///   a' = a(x, c x^mu + y') + b(x, c x^mu + y') * mu c x^(mu - 1),
///   b' = b(x, c x^mu + y').
/// Requires mu >= 1. c = 0 returns w unchanged.
OneForm transform_form(const OneForm& w, const Rat& c, const Rat& mu);

/// df = f_x dx + f_y dy.
OneForm differential(const PuiseuxPoly& f);

}  // namespace puiseux
