#include "puiseux/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

namespace puiseux::oracle {

PuiseuxPoly determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return PuiseuxPoly::constant(1);
  if (n > 20) throw Error("determinant dimension too large for subset expansion");
  for (const auto& row : m)
    if (row.size() != n) throw Error("determinant of a non-square matrix");

  // minors[mask]: determinant of rows 0..popcount(mask)-1 restricted to the
  // columns in mask.
  std::unordered_map<std::uint32_t, PuiseuxPoly> minors{{0U, PuiseuxPoly::constant(1)}};
  for (std::size_t row = 0; row < n; ++row) {
    std::unordered_map<std::uint32_t, PuiseuxPoly> next;
    for (const auto& [mask, minor] : minors) {
      if (minor.is_zero()) continue;
      for (std::size_t col = 0; col < n; ++col) {
        const std::uint32_t bit = 1U << col;
        if ((mask & bit) || m[row][col].is_zero()) continue;
        // parity of chosen columns to the right of col
        const bool odd = std::popcount(mask & ~((bit << 1) - 1)) % 2 == 1;
        PuiseuxPoly term = m[row][col] * minor;
        if (odd) term = -term;
        next[mask | bit] += term;
      }
    }
    minors = std::move(next);
  }
  const auto it = minors.find(static_cast<std::uint32_t>((1ULL << n) - 1));
  return it == minors.end() ? PuiseuxPoly() : it->second;
}

PuiseuxPoly resultant_sylvester(const TPoly& a, const TPoly& b) {
  auto degree = [](const TPoly& p) {
    long d = static_cast<long>(p.size()) - 1;
    while (d >= 0 && p[static_cast<std::size_t>(d)].is_zero()) --d;
    return d;
  };
  const long da = degree(a);
  const long db = degree(b);
  if (da < 0 || db < 0) return PuiseuxPoly();
  const auto n = static_cast<std::size_t>(da + db);
  if (n == 0) return PuiseuxPoly::constant(1);

  PolyMatrix s(n, std::vector<PuiseuxPoly>(n));
  for (long r = 0; r < db; ++r)
    for (long k = 0; k <= da; ++k) s[r][r + k] = a[static_cast<std::size_t>(da - k)];
  for (long r = 0; r < da; ++r)
    for (long k = 0; k <= db; ++k) s[db + r][r + k] = b[static_cast<std::size_t>(db - k)];
  return determinant(s);
}

PuiseuxPoly branch_to_curve(std::span<const std::pair<long, Rat>> coeffs, long m) {
  if (m <= 0) throw Error("ramification must be positive");
  long g = m;
  for (const auto& [k, f] : coeffs) {
    if (f.is_zero()) continue;
    if (k < m) throw Error("exponent " + std::to_string(k) + "/" + std::to_string(m) + " is below 1");
    g = std::gcd(g, k);
  }
  if (g != 1) throw Error("expansion is not primitive: gcd of m and exponents is " + std::to_string(g));

  // y - sum f_k t^k reduced modulo t^m = x, as sum_r parts[r] t^r
  std::vector<PuiseuxPoly> parts(static_cast<std::size_t>(m));
  parts[0] += PuiseuxPoly::y();
  for (const auto& [k, f] : coeffs) parts[static_cast<std::size_t>(k % m)].add_term(k / m, 0, -f);

  const auto n = static_cast<std::size_t>(m);
  PolyMatrix mult(n, std::vector<PuiseuxPoly>(n));
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t row = (r + col) % n;
      mult[row][col] = r + col >= n ? parts[r] * PuiseuxPoly::x() : parts[r];
    }
  }
  return determinant(mult);
}

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return (eng_() & 1U) != 0; }
  Rat nonzero_coeff() {
    long num = uniform(1, 3) * (coin() ? 1 : -1);
    return Rat(num, uniform(1, 2));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace

Case gen_case(std::span<const Rat> signature, std::uint64_t seed) {
  Case out;
  out.signature.assign(signature.begin(), signature.end());
  out.seed = seed;

  long q = 1;
  for (std::size_t k = 0; k < signature.size(); ++k) {
    const Rat& e = signature[k];
    const long d = e.den_long();
    if (k == 0 ? e <= Rat(1) : e <= signature[k - 1])
      throw Error("signature must be increasing and start above 1");
    if (d % q != 0 || d == q) throw Error("denominator of " + e.str() + " does not refine the ramification");
    q = d;
  }
  out.m = q;

  Rng rng(seed);
  // Grid exponents with denominator dividing cur, strictly between lo and hi.
  auto filler = [&](const Rat& lo, const Rat& hi, long cur) -> std::optional<Rat> {
    const Rat width = (hi - lo) * Rat(cur);
    mpz_class room;
    mpz_cdiv_q(room.get_mpz_t(), width.raw().get_num_mpz_t(), width.raw().get_den_mpz_t());
    const long slots = room.get_si() - 1;  // l >= 1 with lo + l / cur < hi
    if (slots < 1) return std::nullopt;
    return lo + Rat(rng.uniform(1, std::min(slots, 2L)), cur);
  };

  if (signature.empty()) {
    out.terms.emplace_back(Rat(1), rng.nonzero_coeff());
    if (rng.coin()) out.terms.emplace_back(Rat(2), rng.nonzero_coeff());
  } else {
    if (rng.coin()) out.terms.emplace_back(Rat(1), rng.nonzero_coeff());
    long cur = 1;
    for (std::size_t k = 0; k < signature.size(); ++k) {
      const Rat lo = out.terms.empty() ? Rat(1) : out.terms.back().first;
      if (!out.terms.empty() && rng.coin())
        if (auto e = filler(lo, signature[k], cur)) out.terms.emplace_back(*e, rng.nonzero_coeff());
      out.terms.emplace_back(signature[k], rng.nonzero_coeff());
      cur = signature[k].den_long();
    }
    if (rng.coin())
      out.terms.emplace_back(out.terms.back().first + Rat(rng.uniform(1, 2), cur), rng.nonzero_coeff());
  }

  std::vector<std::pair<long, Rat>> coeffs;
  for (const auto& [mu, c] : out.terms) coeffs.emplace_back((mu * Rat(out.m)).to_long(), c);
  out.curve = branch_to_curve(coeffs, out.m);

  if (signature.empty()) {
    // a second smooth branch agreeing with the first up to its last term
    PuiseuxPoly partner = PuiseuxPoly::y();
    for (const auto& [mu, c] : out.terms) partner.add_term(mu, 0, -c);
    partner.add_term(out.terms.back().first + Rat(1), 0, -rng.nonzero_coeff());
    out.curve = out.curve * partner;
  }

  out.form = differential(out.curve);
  out.planted = make_branch(out.terms);
  out.planted.exact = true;
  out.expected_r = static_cast<unsigned>(signature.size());
  return out;
}

NewtonPolygon brute_hull(std::span<const CloudPoint> points) {
  if (points.empty()) throw Error("empty cloud has no Newton polygon");
  NewtonPolygon np;
  std::set<CloudPoint> uniq(points.begin(), points.end());
  np.cloud.assign(uniq.begin(), uniq.end());

  // Every co-slope at which two points tie; between consecutive ones the
  // minimizer of i + mu j is constant.
  std::set<Rat> critical;
  for (const auto& p : np.cloud)
    for (const auto& r : np.cloud)
      if (p.j > r.j) {
        Rat mu = (r.i - p.i) / Rat(p.j - r.j);
        if (mu.sign() > 0) critical.insert(mu);
      }
  std::vector<Rat> probes;
  if (critical.empty()) {
    probes.emplace_back(1);
  } else {
    probes.push_back(*critical.begin() / Rat(2));
    for (auto it = critical.begin(); std::next(it) != critical.end(); ++it)
      probes.push_back((*it + *std::next(it)) / Rat(2));
    probes.push_back(*critical.rbegin() * Rat(2) + Rat(1));
  }

  std::set<CloudPoint> verts;
  for (const auto& mu : probes) {
    std::vector<CloudPoint> argmin;
    Rat best;
    for (const auto& p : np.cloud) {
      Rat v = p.i + mu * Rat(p.j);
      if (argmin.empty() || v < best) {
        best = v;
        argmin.assign(1, p);
      } else if (v == best) {
        argmin.push_back(p);
      }
    }
    if (argmin.size() == 1) verts.insert(argmin.front());
  }
  np.vertices.assign(verts.begin(), verts.end());

  for (std::size_t k = 0; k + 1 < np.vertices.size(); ++k) {
    const auto& from = np.vertices[k];
    const auto& to = np.vertices[k + 1];
    Side s{from, to, (to.i - from.i) / Rat(from.j - to.j), {}};
    for (const auto& p : np.cloud)
      if (p.i + s.coslope * Rat(p.j) == from.i + s.coslope * Rat(from.j)) s.members.push_back(p);
    std::sort(s.members.begin(), s.members.end(),
              [](const CloudPoint& l, const CloudPoint& r) { return l.j > r.j; });
    np.sides.push_back(std::move(s));
  }
  return np;
}

}  // namespace puiseux::oracle
