#include "puiseux/poly.hpp"

#include <algorithm>
#include <vector>

namespace puiseux {

PuiseuxPoly::PuiseuxPoly(long ram) : ram_(ram) {
  if (ram <= 0) throw Error("ramification index must be positive");
}

PuiseuxPoly PuiseuxPoly::constant(const Rat& c) { return monomial(c, 0, 0); }

PuiseuxPoly PuiseuxPoly::monomial(const Rat& coeff, const Rat& ex, unsigned ey) {
  PuiseuxPoly p;
  p.add_term(ex, ey, coeff);
  return p;
}

void PuiseuxPoly::add_term(const Rat& ex, unsigned ey, const Rat& coeff) {
  if (coeff.is_zero()) return;
  raise_ram(ex.den_long());
  auto [it, inserted] = terms_.try_emplace(Monomial{ex, ey}, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void PuiseuxPoly::raise_ram(long n) { ram_ = lcm_checked(ram_, n); }

Rat PuiseuxPoly::coeff(const Rat& ex, unsigned ey) const {
  auto it = terms_.find(Monomial{ex, ey});
  return it == terms_.end() ? Rat() : it->second;
}

bool PuiseuxPoly::has_integer_exponents() const {
  return std::ranges::all_of(terms_, [](const auto& t) { return t.first.ex.is_integer(); });
}

unsigned PuiseuxPoly::degree_y() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.ey);
  return d;
}

PuiseuxPoly PuiseuxPoly::operator-() const {
  PuiseuxPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

PuiseuxPoly& PuiseuxPoly::operator+=(const PuiseuxPoly& o) {
  raise_ram(o.ram_);
  for (const auto& [m, c] : o.terms_) add_term(m.ex, m.ey, c);
  return *this;
}

PuiseuxPoly& PuiseuxPoly::operator-=(const PuiseuxPoly& o) {
  raise_ram(o.ram_);
  for (const auto& [m, c] : o.terms_) add_term(m.ex, m.ey, -c);
  return *this;
}

PuiseuxPoly& PuiseuxPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  PuiseuxPoly r(lcm_checked(a.ram_, b.ram_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma.ex + mb.ex, ma.ey + mb.ey, ca * cb);
  return r;
}

PuiseuxPoly PuiseuxPoly::pow(unsigned n) const {
  PuiseuxPoly result = constant(1);
  result.raise_ram(ram_);
  PuiseuxPoly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Valuation order(const PuiseuxPoly& p) {
  if (p.is_zero()) return Valuation::infinity();
  std::optional<Rat> best;
  for (const auto& [m, c] : p.terms()) {
    Rat v = m.ex + Rat(m.ey);
    if (!best || v < *best) best = std::move(v);
  }
  return Valuation::finite(*best);
}

Rat binomial(unsigned n, unsigned k) {
  if (k > n) return Rat();
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rat(r, mpz_class(1));
}

PuiseuxPoly substitute_shift(const PuiseuxPoly& p, const Rat& c, const Rat& mu) {
  if (mu < Rat(1)) throw Error("shift exponent must be at least 1, got " + mu.str());
  if (c.is_zero()) return p;

  std::vector<Rat> c_pow{Rat(1)};
  PuiseuxPoly r(lcm_checked(p.ram(), mu.den_long()));
  for (const auto& [m, coeff] : p.terms()) {
    while (c_pow.size() <= m.ey) c_pow.push_back(c_pow.back() * c);
    // (c x^mu + y)^ey = sum_l C(ey, l) c^l x^(l mu) y^(ey - l)
    for (unsigned l = 0; l <= m.ey; ++l)
      r.add_term(m.ex + Rat(l) * mu, m.ey - l, coeff * binomial(m.ey, l) * c_pow[l]);
  }
  return r;
}

Rat eval_ramified(const PuiseuxPoly& p, const Rat& t0, const Rat& y0) {
  return eval_ramified(p, t0, y0, p.ram());
}

Rat eval_ramified(const PuiseuxPoly& p, const Rat& t0, const Rat& y0, long ram) {
  if (ram <= 0 || ram % p.ram() != 0)
    throw Error("evaluation ramification must be a multiple of the polynomial's");
  Rat sum;
  for (const auto& [m, c] : p.terms()) {
    // x^ex = t^(ex * ram), an integer power by the ram invariant
    const long tx = (m.ex * Rat(ram)).to_long();
    sum += c * t0.pow(tx) * y0.pow(m.ey);
  }
  return sum;
}

}  // namespace puiseux
