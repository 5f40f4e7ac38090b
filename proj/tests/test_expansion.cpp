#include <set>

#include "doctest.h"
#include "puiseux/expansion.hpp"
#include "puiseux/oracle.hpp"
#include "support.hpp"

using namespace puiseux;
using puiseux::testing::poly_of;

namespace {

const OneForm kCusp{poly_of({{-3, 2, 0}}), poly_of({{2, 0, 1}})};
const OneForm kRadial{poly_of({{1, 0, 1}}), poly_of({{-1, 1, 0}})};
// d(y^2 - 2x^2): its only side has Phi = 2c^2 - 4
const OneForm kIrrational{poly_of({{-4, 1, 0}}), poly_of({{2, 0, 1}})};

std::vector<std::pair<Rat, Rat>> terms_of(const PuiseuxBranch& br) {
  std::vector<std::pair<Rat, Rat>> t;
  for (const auto& s : br.steps) t.emplace_back(s.mu, s.c);
  return t;
}

}  // namespace

TEST_CASE("characteristic_poly examples") {
  const NewtonPolygon cusp = newton_polygon(kCusp);
  const CharPoly phi = characteristic_poly(kCusp, support(cusp, Rat(3, 2)));
  CHECK(!phi.dicritical);
  CHECK(phi.coeffs == std::map<unsigned, Rat>{{0, Rat(-3)}, {2, Rat(3)}});
  CHECK(phi.str() == "3*c^2 - 3");
  CHECK(phi.nonzero_rational_roots() == std::vector<Rat>{-1, 1});

  const CharPoly radial = characteristic_poly(kRadial, support(newton_polygon(kRadial), 1));
  CHECK(radial.dicritical);
  CHECK(radial.nonzero_rational_roots().empty());

  const OneForm xdx{poly_of({{1, 1, 0}}), {}};
  const CharPoly constant = characteristic_poly(xdx, support(newton_polygon(xdx), 1));
  CHECK(constant.coeffs == std::map<unsigned, Rat>{{0, Rat(1)}});
  CHECK(constant.nonzero_rational_roots().empty());
}

TEST_CASE("rational roots of Phi") {
  CharPoly phi;
  // 6c^3 - 7c^2 + 1 = (c - 1)(2c - 1)(3c + 1)
  phi.coeffs = {{0, Rat(1)}, {2, Rat(-7)}, {3, Rat(6)}};
  CHECK(phi.nonzero_rational_roots() == std::vector<Rat>{Rat(-1, 3), Rat(1, 2), Rat(1)});
  // c^2 (c^2 - 4/9): the zero root is not reported
  phi.coeffs = {{2, Rat(-4, 9)}, {4, Rat(1)}};
  CHECK(phi.nonzero_rational_roots() == std::vector<Rat>{Rat(-2, 3), Rat(2, 3)});
  // repeated root reported once
  phi.coeffs = {{0, Rat(1)}, {1, Rat(-2)}, {2, Rat(1)}};
  CHECK(phi.nonzero_rational_roots() == std::vector<Rat>{Rat(1)});
}

TEST_CASE("rational roots of products of linear factors") {
  puiseux::testing::Gen g(51);
  for (int trial = 0; trial < 150; ++trial) {
    // c^k * prod (q c - p) * (optional irreducible c^2 + 2), scaled by a rational
    std::map<unsigned, Rat> poly{{static_cast<unsigned>(g.integer(0, 2)), g.nonzero(5, 4)}};
    auto times = [&](const std::map<unsigned, Rat>& f) {
      std::map<unsigned, Rat> out;
      for (const auto& [i, a] : poly)
        for (const auto& [j, b] : f) out[i + j] += a * b;
      std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
      poly = out;
    };
    std::set<Rat> want;
    const long factors = g.integer(1, 4);
    for (long k = 0; k < factors; ++k) {
      const Rat root = g.nonzero(7, 5);
      want.insert(root);
      times({{0, -root}, {1, Rat(1)}});
    }
    if (g.integer(0, 1)) times({{0, Rat(2)}, {2, Rat(1)}});
    CharPoly phi;
    phi.coeffs = poly;
    CHECK(phi.nonzero_rational_roots() == std::vector<Rat>(want.begin(), want.end()));
  }
}

TEST_CASE("positive_divisors") {
  CHECK(positive_divisors(mpz_class(12)) ==
        std::vector<mpz_class>{1, 2, 3, 4, 6, 12});
  CHECK(positive_divisors(mpz_class(-7)) == std::vector<mpz_class>{1, 7});
  // product of two primes beyond the trial-division range
  const mpz_class big = mpz_class(1000003) * mpz_class(1000033);
  const auto d = positive_divisors(big);
  CHECK(d.size() == 4);
  CHECK(d[1] == 1000003);
  CHECK_THROWS_AS(positive_divisors(mpz_class(0)), Error);
}

TEST_CASE("admissible_steps examples") {
  const Limits limits;
  const auto cusp = admissible_steps(kCusp, 1, MuBound::at_least(1), limits);
  REQUIRE(cusp.steps.size() == 2);
  CHECK(cusp.steps[0].mu == Rat(3, 2));
  CHECK(cusp.steps[0].c == Rat(-1));
  CHECK(cusp.steps[1].c == Rat(1));
  CHECK(cusp.steps[1].characteristic);
  CHECK(cusp.steps[1].q_after == 2);
  CHECK(!cusp.steps[1].dicritical);

  const auto radial = admissible_steps(kRadial, 1, MuBound::at_least(1), limits);
  REQUIRE(radial.steps.size() == 1);
  CHECK(radial.steps[0].mu == Rat(1));
  CHECK(radial.steps[0].c == Rat(1));
  CHECK(radial.steps[0].dicritical);
  CHECK(radial.steps[0].contact_kind == ContactKind::vertex);

  const auto none = admissible_steps(kIrrational, 1, MuBound::at_least(1), limits);
  CHECK(none.steps.empty());
  REQUIRE(none.notes.size() == 1);
  CHECK(none.notes[0].find("no rational continuation") != std::string::npos);
}

TEST_CASE("admissible_steps honours the exponent bound and limits") {
  const Limits limits;
  CHECK(admissible_steps(kCusp, 1, MuBound::above(Rat(3, 2)), limits).steps.empty());
  CHECK(admissible_steps(kRadial, 1, MuBound::above(1), limits).steps.empty());

  Limits tight;
  tight.max_ram = 1;
  const auto pruned = admissible_steps(kCusp, 1, MuBound::at_least(1), tight);
  CHECK(pruned.steps.empty());
  CHECK(pruned.pruned.size() == 2);

  Limits short_exp;
  short_exp.max_exp = 2;  // 3/2 = 3/2 needs numerator 3
  CHECK(admissible_steps(kCusp, 1, MuBound::at_least(1), short_exp).pruned.size() == 2);
}

TEST_CASE("admissible_steps orders c by numerator then denominator") {
  // d(y (y - x)(2y - x)(y + x)) has a co-slope 1 side with roots 1/2, 1, -1
  const PuiseuxPoly y = PuiseuxPoly::y();
  const PuiseuxPoly x = PuiseuxPoly::x();
  const PuiseuxPoly f = y * (y - x) * (y * Rat(2) - x) * (y + x);
  const auto steps = admissible_steps(differential(f), 1, MuBound::at_least(1), Limits{});
  std::vector<Rat> cs;
  for (const auto& s : steps.steps) cs.push_back(s.c);
  CHECK(cs == std::vector<Rat>{Rat(-1), Rat(1), Rat(1, 2)});
}

TEST_CASE("vertex dicritical step inside the vertex range") {
  // x dy - (3/2) y dx: every y = c x^(3/2) is invariant
  const OneForm w{poly_of({{Rat(-3, 2), 0, 1}}), poly_of({{1, 1, 0}})};
  const auto steps = admissible_steps(w, 1, MuBound::at_least(1), Limits{});
  REQUIRE(steps.steps.size() == 1);
  CHECK(steps.steps[0].mu == Rat(3, 2));
  CHECK(steps.steps[0].dicritical);
  const auto ex = expand_branches(w);
  REQUIRE(ex.branches.size() == 1);
  CHECK(ex.branches[0].exact);
  CHECK(ex.branches[0].r == 1);
}

TEST_CASE("expand_step examples") {
  BranchStep s;
  s.mu = Rat(3, 2);
  s.c = 1;
  CHECK(cloud(expand_step(kCusp, s)) == Cloud{{Rat(-1), 2}, {Rat(1, 2), 1}});

  s.mu = 1;
  const OneForm radial = expand_step(kRadial, s);
  for (const auto& p : cloud(radial)) CHECK(p.j > 0);

  s.c = 0;
  CHECK(expand_step(kCusp, s) == kCusp);
}

TEST_CASE("expand_branches on the cusp") {
  const Expansion ex = expand_branches(kCusp);
  REQUIRE(ex.branches.size() == 2);
  for (const auto& br : ex.branches) {
    REQUIRE(br.steps.size() == 1);
    CHECK(br.steps[0].mu == Rat(3, 2));
    CHECK(br.r == 1);
    CHECK(br.exact);
    CHECK(invariance_residual(kCusp, br).is_infinite());
  }
  CHECK(ex.branches[0].steps[0].c == Rat(-1));
  CHECK(ex.branches[1].steps[0].c == Rat(1));
  CHECK(!ex.truncated);
}

TEST_CASE("expand_branches on the radial form") {
  const Expansion ex = expand_branches(kRadial);
  REQUIRE(ex.branches.size() == 1);
  const auto& br = ex.branches[0];
  REQUIRE(br.steps.size() == 1);
  CHECK(br.steps[0].dicritical);
  CHECK(br.steps[0].mu == Rat(1));
  CHECK(br.r == 0);
  CHECK(br.exact);

  Limits two;
  two.dicritical_samples = {Rat(1), Rat(-2, 3)};
  const Expansion ex2 = expand_branches(kRadial, two);
  REQUIRE(ex2.branches.size() == 2);
  CHECK(ex2.branches[0].steps[0].c == Rat(-2, 3));
}

TEST_CASE("expand_branches reports the exact y = 0 branch") {
  // f = y (y - x^2): y = 0 and y = x^2
  const PuiseuxPoly y = PuiseuxPoly::y();
  const PuiseuxPoly f = y * (y - poly_of({{1, 2, 0}}));
  const Expansion ex = expand_branches(differential(f));
  REQUIRE(ex.branches.size() == 2);
  CHECK(ex.branches[0].steps.empty());
  CHECK(ex.branches[0].exact);
  REQUIRE(ex.branches[1].steps.size() == 1);
  CHECK(ex.branches[1].steps[0].mu == Rat(2));
  CHECK(ex.branches[1].steps[0].c == Rat(1));
}

TEST_CASE("expand_branches with no rational continuation") {
  const Expansion ex = expand_branches(kIrrational);
  CHECK(ex.branches.empty());
  REQUIRE(!ex.notes.empty());
  CHECK(ex.notes[0].find("no rational continuation") != std::string::npos);
}

TEST_CASE("expand_branches recovers a two-exponent branch") {
  const std::vector<std::pair<long, Rat>> coeffs{{6, 1}, {7, 1}};
  const OneForm w = differential(oracle::branch_to_curve(coeffs, 4));
  const Expansion ex = expand_branches(w);
  const std::vector<std::pair<Rat, Rat>> want{{Rat(3, 2), 1}, {Rat(7, 4), 1}};
  bool found = false;
  for (const auto& br : ex.branches)
    if (terms_of(br) == want) {
      found = true;
      CHECK(br.r == 2);
      CHECK(br.exact);
    }
  CHECK(found);
}

TEST_CASE("expand_branches truncates a non-terminating branch") {
  // x^2 dy - (y - x) dx has the divergent solution y = sum (n-1)! x^n
  const OneForm euler{poly_of({{-1, 0, 1}, {1, 1, 0}}), poly_of({{1, 2, 0}})};
  Limits limits;
  limits.max_exp = 6;
  const Expansion ex = expand_branches(euler, limits);
  REQUIRE(ex.branches.size() == 1);
  const auto& br = ex.branches[0];
  CHECK(!br.exact);
  CHECK(br.truncated_at == Rat(7));
  const std::vector<std::pair<Rat, Rat>> want{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {5, 24}, {6, 120}};
  CHECK(terms_of(br) == want);
  CHECK(invariance_residual(euler, br) == Valuation::finite(7));
}

TEST_CASE("expand_branches stops at max_branches") {
  // product of five lines through the origin
  PuiseuxPoly f = PuiseuxPoly::constant(1);
  for (int k = 1; k <= 5; ++k) f = f * (PuiseuxPoly::y() - poly_of({{Rat(k), 1, 0}}));
  Limits limits;
  limits.max_branches = 3;
  const Expansion ex = expand_branches(differential(f), limits);
  CHECK(ex.branches.size() == 3);
  CHECK(ex.truncated);
  CHECK(expand_branches(differential(f)).branches.size() == 5);
}

TEST_CASE("expand_branches preconditions") {
  CHECK_THROWS_AS(expand_branches(OneForm{}), Error);
  CHECK_THROWS_AS(expand_branches(OneForm{poly_of({{1, 0, 0}}), {}}), Error);
  CHECK_THROWS_AS(expand_branches(OneForm{poly_of({{1, Rat(1, 2), 1}}), {}}), Error);
}

TEST_CASE("count_puiseux_exponents examples") {
  const std::vector<std::pair<Rat, Rat>> two{{Rat(3, 2), 1}, {Rat(7, 4), 1}};
  CHECK(count_puiseux_exponents(make_branch(two)) == 2);
  const std::vector<std::pair<Rat, Rat>> ints{{1, 1}, {2, 1}};
  CHECK(count_puiseux_exponents(make_branch(ints)) == 0);
  const std::vector<std::pair<Rat, Rat>> one{{Rat(3, 2), 1}};
  CHECK(count_puiseux_exponents(make_branch(one)) == 1);
  // same denominator again does not count
  const std::vector<std::pair<Rat, Rat>> again{{Rat(3, 2), 1}, {Rat(5, 2), 1}};
  CHECK(count_puiseux_exponents(make_branch(again)) == 1);
}

TEST_CASE("invariance_residual examples") {
  const std::vector<std::pair<Rat, Rat>> g32{{Rat(3, 2), 1}};
  CHECK(invariance_residual(kCusp, make_branch(g32)).is_infinite());
  const std::vector<std::pair<Rat, Rat>> g1{{1, 1}};
  CHECK(invariance_residual(kCusp, make_branch(g1)) == Valuation::finite(1));
  const OneForm b_only{{}, poly_of({{1, 0, 3}})};
  CHECK(invariance_residual(b_only, PuiseuxBranch{}).is_infinite());
}

TEST_CASE("expansion is deterministic") {
  const std::vector<std::pair<long, Rat>> coeffs{{6, Rat(2, 3)}, {7, -1}, {9, 2}};
  const OneForm w = differential(oracle::branch_to_curve(coeffs, 4));
  const Expansion a = expand_branches(w);
  const Expansion b = expand_branches(w);
  CHECK(a.branches == b.branches);
  CHECK(a.notes == b.notes);
}
