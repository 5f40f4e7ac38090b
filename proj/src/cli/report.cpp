#include "puiseux/cli/report.hpp"

#include <sstream>

#include "puiseux/cli/parse.hpp"

namespace puiseux::cli {

namespace {

std::string point_str(const CloudPoint& p) { return "(" + p.i.str() + "," + std::to_string(p.j) + ")"; }

std::string cloud_str(std::span<const CloudPoint> pts) {
  std::string s = "{";
  for (std::size_t k = 0; k < pts.size(); ++k) s += (k ? ", " : "") + point_str(pts[k]);
  return s + "}";
}

Json check_json(const Check& c) { return Json{{"status", to_string(c.status)}, {"detail", c.detail}}; }

// Phi of every step, from a replay of the branch on w.
std::vector<std::string> step_phis(const OneForm& w, const PuiseuxBranch& br) {
  std::vector<std::string> phis;
  for (const auto& e : trace_branch(w, br)) phis.push_back(characteristic_poly(e.before, e.contact).str());
  return phis;
}

}  // namespace

Json to_json(const Rat& r) { return r.str(); }
Json to_json(const Valuation& v) { return v.str(); }
Json to_json(const CloudPoint& p) { return Json::array({p.i.str(), std::to_string(p.j)}); }

std::string series_str(const PuiseuxBranch& br) { return puiseux::series_str(br.steps); }

Json polygon_report(const OneForm& w) {
  const NewtonPolygon np = newton_polygon(w);
  Json cloud_j = Json::array(), vertices = Json::array(), sides = Json::array();
  for (const auto& p : np.cloud) cloud_j.push_back(to_json(p));
  for (const auto& p : np.vertices) vertices.push_back(to_json(p));
  for (const auto& s : np.sides) {
    Json members = Json::array();
    for (const auto& p : s.members) members.push_back(to_json(p));
    sides.push_back(Json{{"from", to_json(s.from)}, {"to", to_json(s.to)},
                         {"coslope", to_json(s.coslope)}, {"members", members}});
  }
  return Json{{"a", format_poly(w.a)},
              {"b", format_poly(w.b)},
              {"cloud", cloud_j},
              {"polygon", Json{{"vertices", vertices}, {"sides", sides}}},
              {"y_order", y_order(w)},
              {"multiplicity", multiplicity(w)}};
}

Json expansion_report(const OneForm& w, const Expansion& ex) {
  Json branches = Json::array();
  for (const auto& br : ex.branches) {
    const auto phis = step_phis(w, br);
    Json steps = Json::array();
    for (std::size_t k = 0; k < br.steps.size(); ++k) {
      const auto& s = br.steps[k];
      steps.push_back(Json{{"mu", to_json(s.mu)},
                           {"c", to_json(s.c)},
                           {"q_before", s.q_before},
                           {"q_after", s.q_after},
                           {"characteristic", s.characteristic},
                           {"contact", to_string(s.contact_kind)},
                           {"dicritical", s.dicritical},
                           {"phi", phis[k]}});
    }
    branches.push_back(Json{{"series", series_str(br)},
                            {"steps", steps},
                            {"r", br.r},
                            {"exact", br.exact},
                            {"truncated_at", to_json(br.truncated_at)},
                            {"residual", to_json(invariance_residual(w, br))}});
  }
  return Json{{"branches", branches}, {"notes", ex.notes}, {"truncated", ex.truncated}};
}

Json bound_report(const BoundReport& b) {
  return Json{{"max_r", b.max_r},
              {"y_order", b.y_order},
              {"multiplicity", b.multiplicity},
              {"bound_ok", b.ok},
              {"verdict", b.ok ? "PASS" : "FAIL"}};
}

Json lemma_report(const OneForm& w, const Expansion& ex) {
  Json branches = Json::array();
  bool ok = true;
  for (const auto& br : ex.branches) {
    Json steps = Json::array();
    for (const auto& r : lemma_checks(trace_branch(w, br))) {
      ok = ok && r.ok();
      steps.push_back(Json{{"index", r.index},
                           {"mu", to_json(r.mu)},
                           {"height", r.height},
                           {"s", r.s},
                           {"next", r.next},
                           {"first_axis", check_json(r.first_axis)},
                           {"descent", check_json(r.descent)},
                           {"survivors", check_json(r.survivors)},
                           {"next_height", check_json(r.next_height)},
                           {"height_cap", check_json(r.height_cap)},
                           {"ok", r.ok()}});
    }
    branches.push_back(Json{{"series", series_str(br)}, {"steps", steps}});
  }
  return Json{{"branches", branches}, {"ok", ok}, {"verdict", ok ? "PASS" : "FAIL"}};
}

Json case_report(const oracle::Case& c) {
  Json sig = Json::array(), terms = Json::array();
  for (const auto& e : c.signature) sig.push_back(to_json(e));
  for (const auto& [mu, coeff] : c.terms) terms.push_back(Json::array({to_json(mu), to_json(coeff)}));
  return Json{{"signature", sig},
              {"seed", c.seed},
              {"a", format_poly(c.form.a)},
              {"b", format_poly(c.form.b)},
              {"curve", format_poly(c.curve)},
              {"planted", Json{{"series", series_str(c.planted)}, {"terms", terms}}},
              {"expected_r", c.expected_r},
              {"y_order", y_order(c.form)},
              {"multiplicity", multiplicity(c.form)}};
}

void print_polygon(std::ostream& out, const OneForm& w) {
  const NewtonPolygon np = newton_polygon(w);
  out << "cloud: " << cloud_str(np.cloud) << "\n";
  out << "vertices: " << cloud_str(np.vertices) << "\n";
  for (const auto& s : np.sides)
    out << "side " << point_str(s.from) << " -- " << point_str(s.to) << "  co-slope " << s.coslope
        << "  members " << cloud_str(s.members) << "\n";
  out << "y-order: " << y_order(w) << "\n";
  out << "multiplicity: " << multiplicity(w) << "\n";
}

void print_expansion(std::ostream& out, const OneForm& w, const Expansion& ex) {
  out << ex.branches.size() << " branch" << (ex.branches.size() == 1 ? "" : "es") << "\n";
  for (std::size_t b = 0; b < ex.branches.size(); ++b) {
    const auto& br = ex.branches[b];
    const auto phis = step_phis(w, br);
    out << "branch " << b + 1 << ": " << series_str(br) << "\n";
    for (std::size_t k = 0; k < br.steps.size(); ++k) {
      const auto& s = br.steps[k];
      out << "  mu = " << s.mu << ", c = " << s.c << ", " << to_string(s.contact_kind)
          << ", Phi(c) = " << phis[k] << ", q " << s.q_before << " -> " << s.q_after
          << (s.characteristic ? ", characteristic" : "") << (s.dicritical ? ", dicritical" : "") << "\n";
    }
    out << "  r = " << br.r << ", " << (br.exact ? "exact" : "truncated at mu = " + br.truncated_at.str())
        << ", residual valuation " << invariance_residual(w, br) << "\n";
  }
  for (const auto& n : ex.notes) out << "note: " << n << "\n";
}

void print_bound(std::ostream& out, const BoundReport& b) {
  out << (b.ok ? "PASS" : "FAIL") << " (" << b.max_r << ", " << b.y_order << ", " << b.multiplicity
      << ")  max r <= y-order <= multiplicity\n";
}

bool print_lemmas(std::ostream& out, const OneForm& w, const Expansion& ex) {
  bool ok = true;
  for (const auto& br : ex.branches) {
    out << series_str(br) << "\n";
    for (const auto& r : lemma_checks(trace_branch(w, br))) {
      ok = ok && r.ok();
      out << "  step " << r.index + 1 << " mu = " << r.mu << " height " << r.height << " s " << r.s
          << " next " << r.next << (r.ok() ? "" : "  FAIL") << "\n";
      const std::pair<const char*, const Check*> rows[] = {{"first_axis", &r.first_axis},
                                                           {"descent", &r.descent},
                                                           {"survivors", &r.survivors},
                                                           {"next_height", &r.next_height},
                                                           {"height_cap", &r.height_cap}};
      for (const auto& [name, c] : rows) {
        out << "    " << name << ": " << to_string(c->status);
        if (!c->detail.empty()) out << "  " << c->detail;
        out << "\n";
      }
    }
  }
  out << (ok ? "PASS" : "FAIL") << "\n";
  return ok;
}

void print_case(std::ostream& out, const oracle::Case& c) {
  out << format_poly(c.form.a) << "\n" << format_poly(c.form.b) << "\n";
  out << "# seed " << c.seed << ", signature";
  for (const auto& e : c.signature) out << " " << e;
  out << "\n# curve " << format_poly(c.curve) << "\n";
  out << "# planted " << series_str(c.planted) << "\n";
  out << "# expected r " << c.expected_r << ", y-order " << y_order(c.form) << ", multiplicity "
      << multiplicity(c.form) << "\n";
}

}  // namespace puiseux::cli
