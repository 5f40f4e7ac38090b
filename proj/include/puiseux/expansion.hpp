#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "puiseux/polygon.hpp"

namespace puiseux {

/// Phi(c) = sum over the contact points (i,j) of (a_{i,j} + mu b_{i+1,j-1}) c^j.
/// Its nonzero roots are the leading coefficients c for which y = c x^mu + ...
/// can continue an invariant branch.
struct CharPoly {
  Rat mu;
  std::map<unsigned, Rat> coeffs;  // j -> nonzero coefficient
  bool dicritical = false;         // Phi vanishes identically

  Rat eval(const Rat& c) const;
  /// Distinct nonzero rational roots, ascending. Empty when dicritical.
  std::vector<Rat> nonzero_rational_roots() const;
  /// Human-readable, e.g. "3*c^2 - 3".
  std::string str() const;
};

CharPoly characteristic_poly(const OneForm& w, const SupportContact& contact);

/// Positive divisors of |n|, ascending. n must be nonzero.
std::vector<mpz_class> positive_divisors(const mpz_class& n);

/// One term c x^mu of a branch together with its ramification bookkeeping.
struct BranchStep {
  Rat mu;
  Rat c;
  long q_before = 1;
  long q_after = 1;  // lcm(q_before, den(mu))
  bool characteristic = false;  // q_after > q_before
  ContactKind contact_kind = ContactKind::side;
  bool dicritical = false;

  friend bool operator==(const BranchStep&, const BranchStep&) = default;
};

/// A truncated Puiseux series y = sum c x^mu, one step per term.
struct PuiseuxBranch {
  std::vector<BranchStep> steps;  // strictly increasing mu
  unsigned r = 0;                 // number of characteristic steps
  Rat truncated_at;               // last exponent computed, or the first one cut by limits
  bool exact = false;             // the truncated series is itself invariant

  friend bool operator==(const PuiseuxBranch&, const PuiseuxBranch&) = default;
};

/// Bookkeeping for a given list of (mu, c) terms with increasing mu.
PuiseuxBranch make_branch(std::span<const std::pair<Rat, Rat>> terms);

struct Limits {
  long max_exp = 40;  // mu * q_after may not exceed this
  long max_ram = 16;
  std::size_t max_branches = 64;
  std::vector<Rat> dicritical_samples{Rat(1)};
};

/// Lower bound on the next exponent: mu >= 1 for the first step, mu > previous after.
struct MuBound {
  Rat value{1};
  bool inclusive = true;

  static MuBound at_least(Rat v) { return {std::move(v), true}; }
  static MuBound above(Rat v) { return {std::move(v), false}; }
  bool admits(const Rat& mu) const { return inclusive ? mu >= value : mu > value; }
};

struct PrunedStep {
  BranchStep step;
  std::string reason;
};

struct StepCandidates {
  std::vector<BranchStep> steps;  // ordered by mu, then c by numerator, then denominator
  std::vector<PrunedStep> pruned;
  std::vector<std::string> notes;
};

/// Enumerates the next terms (mu, c) of invariant branches through w:
/// nonzero rational roots of Phi on every side with admissible co-slope, and
/// dicritical vertices, where a_{i,j} + mu b_{i+1,j-1} = 0 for a mu strictly
/// inside the vertex's co-slope range.
StepCandidates admissible_steps(const OneForm& w, long q_before, const MuBound& bound,
                                const Limits& limits);

/// transform_form(w, step.c, step.mu).
OneForm expand_step(const OneForm& w, const BranchStep& step);

struct Expansion {
  std::vector<PuiseuxBranch> branches;
  std::vector<std::string> notes;
  bool truncated = false;  // stopped at limits.max_branches
};

/// Depth-first Newton-Puiseux expansion of every invariant branch of a
/// singular form with integer exponents, in (mu, c) order. A branch closes when
/// the transformed form has no j = 0 cloud point, or when limits cut it.
Expansion expand_branches(const OneForm& w, const Limits& limits = {});

/// Number of steps at which the ramification strictly grows.
unsigned count_puiseux_exponents(const PuiseuxBranch& branch);

/// x-valuation of a(x, G) + b(x, G) G' for the truncated series G of the
/// branch; infinite when it vanishes identically.
Valuation invariance_residual(const OneForm& w, const PuiseuxBranch& branch);

/// "y = -x^(3/2) + 2*x^2"; "y = 0" for no steps.
std::string series_str(std::span<const BranchStep> steps);

/// sum c x^mu over the steps, as a polynomial in x alone.
PuiseuxPoly branch_series(const PuiseuxBranch& branch);

}  // namespace puiseux
