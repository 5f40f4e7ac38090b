#include "puiseux/expansion.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace puiseux {

namespace {

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& out);

mpz_class pollard_brent(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long inc = 1;; ++inc) {
    mpz_class x = 2, y = 2, d = 1;
    auto step = [&](const mpz_class& v) { return mpz_class((v * v + inc) % n); };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      mpz_class diff = x - y;
      diff = abs(diff);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  const mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(mpz_class(n / d), out);
}

bool step_order(const BranchStep& l, const BranchStep& r) {
  if (l.mu != r.mu) return l.mu < r.mu;
  if (l.c.num() != r.c.num()) return l.c.num() < r.c.num();
  return l.c.den() < r.c.den();
}

}  // namespace

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  if (n == 0) throw Error("divisors of zero");
  mpz_class m = abs(n);
  std::map<mpz_class, unsigned> primes;
  for (unsigned long p = 2; p < 1000 && m > 1; ++p) {
    while (m % p == 0) {
      ++primes[mpz_class(p)];
      m /= p;
    }
  }
  factor_into(m, primes);

  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : primes) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t idx = 0; idx < base; ++idx) divs.push_back(divs[idx] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Rat CharPoly::eval(const Rat& c) const {
  Rat sum;
  for (const auto& [j, coeff] : coeffs) sum += coeff * c.pow(j);
  return sum;
}

std::vector<Rat> CharPoly::nonzero_rational_roots() const {
  if (coeffs.size() < 2) return {};
  const unsigned lo = coeffs.begin()->first;
  const unsigned hi = coeffs.rbegin()->first;
  auto at = [&](unsigned j) {
    const auto it = coeffs.find(j);
    return it == coeffs.end() ? Rat() : it->second;
  };

  // Phi = c^lo (u c + v) or c^lo (u c^2 + v c + w)
  if (hi - lo == 1) return {-at(lo) / at(hi)};
  if (hi - lo == 2) {
    const Rat u = at(hi), v = at(lo + 1), w = at(lo);
    const Rat disc = v * v - Rat(4) * u * w;
    if (disc.sign() < 0) return {};
    const mpz_class n = disc.num(), d = disc.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return {};
    const Rat root(mpz_class(sqrt(n)), mpz_class(sqrt(d)));
    std::set<Rat> roots{(-v - root) / (Rat(2) * u), (-v + root) / (Rat(2) * u)};
    return {roots.begin(), roots.end()};
  }

  // Clear denominators and content; the roots of the primitive integer
  // polynomial are p/q with p | constant term and q | leading coefficient.
  mpz_class den_lcm = 1;
  for (const auto& [j, coeff] : coeffs) {
    const mpz_class d = coeff.den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  mpz_class content = 0;
  for (const auto& [j, coeff] : coeffs) {
    const mpz_class v = coeff.num() * (den_lcm / coeff.den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  const mpz_class a0 = coeffs.at(lo).num() * (den_lcm / coeffs.at(lo).den()) / content;
  const mpz_class an = coeffs.at(hi).num() * (den_lcm / coeffs.at(hi).den()) / content;

  std::set<Rat> roots;
  const auto ps = positive_divisors(a0);
  const auto qs = positive_divisors(an);
  for (const auto& p : ps) {
    for (const auto& q : qs) {
      for (int sgn : {1, -1}) {
        Rat cand(mpz_class(sgn * p), q);
        if (!roots.contains(cand) && eval(cand).is_zero()) roots.insert(cand);
      }
    }
  }
  return {roots.begin(), roots.end()};
}

std::string CharPoly::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    const auto& [j, coeff] = *it;
    const Rat mag = coeff.abs();
    if (first)
      os << (coeff.sign() < 0 ? "-" : "");
    else
      os << (coeff.sign() < 0 ? " - " : " + ");
    first = false;
    const bool unit = mag == Rat(1);
    if (!unit || j == 0) os << mag;
    if (j > 0) os << (unit ? "" : "*") << "c" << (j > 1 ? "^" + std::to_string(j) : "");
  }
  return os.str();
}

CharPoly characteristic_poly(const OneForm& w, const SupportContact& contact) {
  CharPoly phi;
  phi.mu = contact.mu;
  for (const auto& p : contact.points) {
    Rat v = w.a.coeff(p.i, p.j);
    if (p.j > 0) v += contact.mu * w.b.coeff(p.i + Rat(1), p.j - 1);
    if (!v.is_zero()) phi.coeffs.emplace(p.j, std::move(v));
  }
  phi.dicritical = phi.coeffs.empty();
  return phi;
}

PuiseuxBranch make_branch(std::span<const std::pair<Rat, Rat>> terms) {
  PuiseuxBranch br;
  long q = 1;
  for (const auto& [mu, c] : terms) {
    if (!br.steps.empty() && mu <= br.steps.back().mu)
      throw Error("branch exponents must strictly increase");
    BranchStep s;
    s.mu = mu;
    s.c = c;
    s.q_before = q;
    s.q_after = lcm_checked(q, mu.den_long());
    s.characteristic = s.q_after > s.q_before;
    q = s.q_after;
    br.steps.push_back(std::move(s));
  }
  br.r = count_puiseux_exponents(br);
  if (!br.steps.empty()) br.truncated_at = br.steps.back().mu;
  return br;
}

StepCandidates admissible_steps(const OneForm& w, long q_before, const MuBound& bound,
                                const Limits& limits) {
  StepCandidates out;
  const NewtonPolygon np = newton_polygon(w);

  auto offer = [&](const Rat& mu, const Rat& c, ContactKind kind, bool dicritical) {
    BranchStep s;
    s.mu = mu;
    s.c = c;
    s.q_before = q_before;
    s.q_after = lcm_checked(q_before, mu.den_long());
    s.characteristic = s.q_after > q_before;
    s.contact_kind = kind;
    s.dicritical = dicritical;
    if (s.q_after > limits.max_ram) {
      out.pruned.push_back({std::move(s), "ramification above " + std::to_string(limits.max_ram)});
    } else if (mu * Rat(s.q_after) > Rat(limits.max_exp)) {
      out.pruned.push_back({std::move(s), "exponent numerator above " + std::to_string(limits.max_exp)});
    } else {
      out.steps.push_back(std::move(s));
    }
  };

  for (const auto& side : np.sides) {
    if (!bound.admits(side.coslope)) continue;
    const CharPoly phi = characteristic_poly(w, support(np, side.coslope));
    if (phi.dicritical) {
      for (const auto& c : limits.dicritical_samples)
        if (!c.is_zero()) offer(side.coslope, c, ContactKind::side, true);
      continue;
    }
    const auto roots = phi.nonzero_rational_roots();
    if (roots.empty())
      out.notes.push_back("no rational continuation at mu=" + side.coslope.str() +
                          ": Phi(c) = " + phi.str());
    for (const auto& c : roots) offer(side.coslope, c, ContactKind::side, false);
  }

  for (std::size_t idx = 0; idx < np.vertices.size(); ++idx) {
    const auto& v = np.vertices[idx];
    if (v.j == 0) continue;
    const Rat b = w.b.coeff(v.i + Rat(1), v.j - 1);
    if (b.is_zero()) continue;
    const Rat mu = -w.a.coeff(v.i, v.j) / b;
    const auto [lo, hi] = np.vertex_interval(idx);
    if (mu <= lo || (hi && mu >= *hi) || !bound.admits(mu)) continue;
    for (const auto& c : limits.dicritical_samples)
      if (!c.is_zero()) offer(mu, c, ContactKind::vertex, true);
  }

  std::sort(out.steps.begin(), out.steps.end(), step_order);
  std::sort(out.pruned.begin(), out.pruned.end(),
            [](const PrunedStep& l, const PrunedStep& r) { return step_order(l.step, r.step); });
  return out;
}

OneForm expand_step(const OneForm& w, const BranchStep& step) {
  return transform_form(w, step.c, step.mu);
}

namespace {

class Expander {
 public:
  Expander(const Limits& limits, Expansion& out) : limits_(limits), out_(out) {}

  void visit(const OneForm& form, long q, const MuBound& bound) {
    if (full()) return;
    const bool exact = std::ranges::none_of(form.a.terms(), [](const auto& t) { return t.first.ey == 0; });
    const StepCandidates cand = admissible_steps(form, q, bound, limits_);

    // The exact prefix is the c = 0 member of any dicritical family rooted here.
    const bool family = std::ranges::any_of(cand.steps, [](const auto& s) { return s.dicritical; }) ||
                        std::ranges::any_of(cand.pruned, [](const auto& p) { return p.step.dicritical; });
    if (exact && !family) record(true, prefix_.empty() ? Rat() : prefix_.back().mu);

    for (const auto& note : cand.notes) out_.notes.push_back(series_str(prefix_) + ": " + note);
    for (const auto& p : cand.pruned)
      out_.notes.push_back(series_str(prefix_) + ": truncated at mu=" + p.step.mu.str() +
                           " c=" + p.step.c.str() + " (" + p.reason + ")");
    if (!exact && !cand.pruned.empty()) record(false, cand.pruned.front().step.mu);

    for (const auto& step : cand.steps) {
      if (full()) return;
      prefix_.push_back(step);
      visit(expand_step(form, step), step.q_after, MuBound::above(step.mu));
      prefix_.pop_back();
    }
  }

 private:
  bool full() {
    if (out_.branches.size() < limits_.max_branches) return false;
    if (!out_.truncated) {
      out_.truncated = true;
      out_.notes.push_back("stopped after " + std::to_string(limits_.max_branches) + " branches");
    }
    return true;
  }

  void record(bool exact, Rat truncated_at) {
    if (full()) return;
    PuiseuxBranch br;
    br.steps = prefix_;
    br.r = count_puiseux_exponents(br);
    br.exact = exact;
    br.truncated_at = std::move(truncated_at);
    out_.branches.push_back(std::move(br));
  }

  const Limits& limits_;
  Expansion& out_;
  std::vector<BranchStep> prefix_;
};

}  // namespace

Expansion expand_branches(const OneForm& w, const Limits& limits) {
  if (!w.has_integer_exponents()) throw Error("expansion needs a form with integer exponents");
  if (w.is_zero()) throw Error("expansion of the zero form");
  if (!w.is_singular()) throw Error("expansion needs a singular form");
  Expansion out;
  Expander(limits, out).visit(w, 1, MuBound::at_least(1));
  return out;
}

unsigned count_puiseux_exponents(const PuiseuxBranch& branch) {
  return static_cast<unsigned>(
      std::ranges::count_if(branch.steps, [](const BranchStep& s) { return s.q_after > s.q_before; }));
}

PuiseuxPoly branch_series(const PuiseuxBranch& branch) {
  PuiseuxPoly g;
  for (const auto& s : branch.steps) g.add_term(s.mu, 0, s.c);
  return g;
}

Valuation invariance_residual(const OneForm& w, const PuiseuxBranch& branch) {
  const PuiseuxPoly g = branch_series(branch);
  PuiseuxPoly dg;
  for (const auto& s : branch.steps) dg.add_term(s.mu - Rat(1), 0, s.mu * s.c);

  std::vector<PuiseuxPoly> g_pow{PuiseuxPoly::constant(1)};
  auto power = [&](unsigned e) -> const PuiseuxPoly& {
    while (g_pow.size() <= e) g_pow.push_back(g_pow.back() * g);
    return g_pow[e];
  };
  auto along = [&](const PuiseuxPoly& p) {
    PuiseuxPoly r;
    for (const auto& [m, c] : p.terms()) r += power(m.ey) * PuiseuxPoly::monomial(c, m.ex, 0);
    return r;
  };
  return order(along(w.a) + along(w.b) * dg);
}

std::string series_str(std::span<const BranchStep> steps) {
  if (steps.empty()) return "y = 0";
  std::ostringstream os;
  os << "y = ";
  bool first = true;
  for (const auto& s : steps) {
    const Rat mag = s.c.abs();
    if (first)
      os << (s.c.sign() < 0 ? "-" : "");
    else
      os << (s.c.sign() < 0 ? " - " : " + ");
    first = false;
    if (mag != Rat(1)) os << mag << '*';
    os << 'x';
    if (s.mu != Rat(1)) {
      if (s.mu.is_integer())
        os << '^' << s.mu;
      else
        os << "^(" << s.mu << ')';
    }
  }
  return os.str();
}

}  // namespace puiseux
