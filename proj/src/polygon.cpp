#include "puiseux/polygon.hpp"

#include <algorithm>

namespace puiseux {

namespace {

// z-component of (a - o) x (b - o)
Rat cross(const CloudPoint& o, const CloudPoint& a, const CloudPoint& b) {
  return (a.i - o.i) * (Rat(b.j) - Rat(o.j)) - (Rat(a.j) - Rat(o.j)) * (b.i - o.i);
}

Rat functional(const CloudPoint& p, const Rat& mu) { return p.i + mu * Rat(p.j); }

}  // namespace

const char* to_string(ContactKind kind) { return kind == ContactKind::side ? "side" : "vertex"; }

std::pair<Rat, std::optional<Rat>> NewtonPolygon::vertex_interval(std::size_t idx) const {
  if (idx >= vertices.size()) throw Error("vertex index out of range");
  Rat lo = idx > 0 ? sides[idx - 1].coslope : Rat();
  std::optional<Rat> hi;
  if (idx < sides.size()) hi = sides[idx].coslope;
  return {lo, hi};
}

Cloud cloud(const OneForm& w) {
  Cloud pts;
  pts.reserve(w.a.size() + w.b.size());
  for (const auto& [m, c] : w.a.terms()) {
    if (m.ex < Rat(-1)) throw Error("malformed form: a-term at x^" + m.ex.str());
    pts.push_back({m.ex, m.ey});
  }
  for (const auto& [m, c] : w.b.terms()) {
    if (m.ex.sign() < 0) throw Error("malformed form: b-term at x^" + m.ex.str());
    pts.push_back({m.ex - Rat(1), m.ey + 1});
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

NewtonPolygon newton_polygon(std::span<const CloudPoint> points) {
  if (points.empty()) throw Error("empty cloud has no Newton polygon");
  NewtonPolygon np;
  np.cloud.assign(points.begin(), points.end());
  std::sort(np.cloud.begin(), np.cloud.end());
  np.cloud.erase(std::unique(np.cloud.begin(), np.cloud.end()), np.cloud.end());

  // Staircase of non-dominated points: increasing i, strictly decreasing j.
  std::vector<CloudPoint> stairs;
  for (const auto& p : np.cloud)
    if (stairs.empty() || p.j < stairs.back().j) stairs.push_back(p);

  // Lower convex chain; collinear points are dropped from the vertex list.
  auto& hull = np.vertices;
  for (const auto& p : stairs) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p).sign() <= 0)
      hull.pop_back();
    hull.push_back(p);
  }

  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    Side s{hull[k], hull[k + 1], (hull[k + 1].i - hull[k].i) / Rat(hull[k].j - hull[k + 1].j), {}};
    const Rat tau = functional(s.from, s.coslope);
    for (const auto& p : np.cloud)
      if (functional(p, s.coslope) == tau) s.members.push_back(p);
    std::sort(s.members.begin(), s.members.end(),
              [](const CloudPoint& l, const CloudPoint& r) { return l.j > r.j; });
    np.sides.push_back(std::move(s));
  }
  return np;
}

NewtonPolygon newton_polygon(const OneForm& w) { return newton_polygon(cloud(w)); }

SupportContact support(const NewtonPolygon& np, const Rat& mu) {
  if (mu.sign() <= 0) throw Error("co-slope must be positive, got " + mu.str());
  if (np.cloud.empty()) throw Error("support of an empty polygon");
  SupportContact sc;
  sc.mu = mu;
  bool first = true;
  for (const auto& p : np.cloud) {
    Rat v = functional(p, mu);
    if (first || v < sc.tau) {
      sc.tau = std::move(v);
      sc.points.assign(1, p);
      first = false;
    } else if (v == sc.tau) {
      sc.points.push_back(p);
    }
  }
  std::sort(sc.points.begin(), sc.points.end(),
            [](const CloudPoint& l, const CloudPoint& r) { return l.j > r.j; });
  sc.kind = sc.points.size() > 1 ? ContactKind::side : ContactKind::vertex;
  return sc;
}

unsigned y_order(const OneForm& w) { return support(newton_polygon(w), Rat(1)).highest().j; }

unsigned multiplicity(const OneForm& w) {
  if (!w.has_integer_exponents())
    throw Error("multiplicity is only defined for forms with integer exponents");
  if (w.is_zero()) throw Error("multiplicity of the zero form");
  const Valuation v = std::min(order(w.a), order(w.b));
  return static_cast<unsigned>(v.value().to_long()) + 1;
}

}  // namespace puiseux
