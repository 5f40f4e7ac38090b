#include "puiseux/form.hpp"

namespace puiseux {

OneForm transform_form(const OneForm& w, const Rat& c, const Rat& mu) {
  if (mu < Rat(1)) throw Error("shift exponent must be at least 1, got " + mu.str());
  if (c.is_zero()) return w;

  OneForm out;
  out.b = substitute_shift(w.b, c, mu);
  out.a = substitute_shift(w.a, c, mu);
  // d(c x^mu + y') = mu c x^(mu - 1) dx + dy'
  out.a += out.b * PuiseuxPoly::monomial(mu * c, mu - Rat(1), 0);
  return out;
}

OneForm differential(const PuiseuxPoly& f) {
  OneForm df;
  df.a.raise_ram(f.ram());
  df.b.raise_ram(f.ram());
  for (const auto& [m, c] : f.terms()) {
    if (!m.ex.is_zero()) df.a.add_term(m.ex - Rat(1), m.ey, c * m.ex);
    if (m.ey > 0) df.b.add_term(m.ex, m.ey - 1, c * Rat(m.ey));
  }
  return df;
}

}  // namespace puiseux
