#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "puiseux/expansion.hpp"

namespace puiseux::oracle {

/// Square matrix of polynomials, row-major.
using PolyMatrix = std::vector<std::vector<PuiseuxPoly>>;

/// Determinant by row-wise Laplace expansion over column subsets.
/// Exponential in the dimension; intended for n <= 16.
PuiseuxPoly determinant(const PolyMatrix& m);

/// Univariate polynomial in an auxiliary variable t with polynomial
/// coefficients; index = degree in t.
using TPoly = std::vector<PuiseuxPoly>;

/// Res_t(A, B) as the determinant of the Sylvester matrix.
PuiseuxPoly resultant_sylvester(const TPoly& a, const TPoly& b);

/// The curve f vanishing on y = sum f_k x^(k/m): the resultant
/// Res_t(y - sum f_k t^k, t^m - x), normalized to be monic in y (it differs
/// from the resultant by the sign (-1)^(K m), K = max k). Computed as the
/// determinant of multiplication by y - sum f_k t^k on Q[x,y][t] / (t^m - x),
/// the Sylvester matrix reduced by the monic t^m - x.
/// Requires every k >= m and gcd(m, all k) = 1.
PuiseuxPoly branch_to_curve(std::span<const std::pair<long, Rat>> coeffs, long m);

/// A generated form with a planted invariant branch.
struct Case {
  std::vector<Rat> signature;  // characteristic exponents
  std::uint64_t seed = 0;
  long m = 1;                  // common denominator of the planted exponents
  std::vector<std::pair<Rat, Rat>> terms;  // planted (mu, c)
  PuiseuxPoly curve;
  OneForm form;
  PuiseuxBranch planted;
  unsigned expected_r = 0;
};

/// Plants a branch with the given characteristic exponents, random nonzero
/// coefficients and random non-characteristic filler terms, and returns
/// w = df for the curve through it. Each exponent's denominator must be a
/// proper multiple of the previous ones' lcm. An empty signature plants a
/// smooth branch y = c x + ...; since its curve alone is not singular, it is
/// multiplied by a second smooth curve sharing its leading terms.
Case gen_case(std::span<const Rat> signature, std::uint64_t seed);

/// Lower-left polygon by exhaustive search: a point is a vertex iff some
/// functional i + mu j, mu > 0, is minimized at it alone. Quadratic in the
/// number of candidate co-slopes; meant for clouds of at most ~50 points.
NewtonPolygon brute_hull(std::span<const CloudPoint> cloud);

}  // namespace puiseux::oracle
