#include "puiseux/checks.hpp"

#include <algorithm>
#include <sstream>

namespace puiseux {

namespace {

Check pass(std::string detail = {}) { return {Check::Status::pass, std::move(detail)}; }
Check vacuous(std::string detail = {}) { return {Check::Status::vacuous, std::move(detail)}; }
Check fail(std::string detail) { return {Check::Status::fail, std::move(detail)}; }

std::string point_str(const Rat& i, long j) {
  return "(" + i.str() + "," + std::to_string(j) + ")";
}

}  // namespace

const char* to_string(Check::Status status) {
  switch (status) {
    case Check::Status::pass: return "pass";
    case Check::Status::vacuous: return "vacuous";
    case Check::Status::fail: return "FAIL";
  }
  return "?";
}

std::vector<TraceEntry> trace_branch(const OneForm& w, const PuiseuxBranch& branch) {
  std::vector<TraceEntry> trace;
  OneForm current = w;
  for (const auto& step : branch.steps) {
    TraceEntry e{current, support(newton_polygon(current), step.mu), step, expand_step(current, step)};
    current = e.after;
    trace.push_back(std::move(e));
  }
  return trace;
}

std::vector<StepReport> lemma_checks(std::span<const TraceEntry> trace) {
  std::vector<StepReport> reports;
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const TraceEntry& e = trace[k];
    const CloudPoint& top = e.contact.highest();
    const Cloud after_cloud = cloud(e.after);
    const Rat& mu = e.step.mu;

    StepReport rep;
    rep.index = k;
    rep.mu = mu;
    rep.height = top.j;
    rep.s = e.step.q_after / e.step.q_before;
    const SupportContact again = support(newton_polygon(after_cloud), mu);
    rep.next = k + 1 < trace.size() ? trace[k + 1].contact.highest().j : again.lowest().j;

    // j = 0 points strictly right of tau
    {
      std::vector<Rat> axis;
      for (const auto& p : after_cloud)
        if (p.j == 0) axis.push_back(p.i);
      if (axis.empty()) {
        rep.first_axis = vacuous("no point on the horizontal axis");
      } else if (axis.front() > e.contact.tau) {
        rep.first_axis = pass("leftmost axis point " + axis.front().str() + " > tau " + e.contact.tau.str());
      } else {
        rep.first_axis = fail("axis point " + axis.front().str() + " <= tau " + e.contact.tau.str());
      }
    }

    if (again.kind != ContactKind::side) {
      rep.descent = vacuous("same co-slope touches the new polygon at a vertex");
    } else if (rep.next < top.j) {
      rep.descent = pass("height " + std::to_string(top.j) + " -> " + std::to_string(rep.next));
    } else {
      rep.descent = fail("height " + std::to_string(top.j) + " -> " + std::to_string(rep.next));
    }

    const bool ramifies = rep.s > 1 && top.j > 1 && !e.step.c.is_zero();
    if (!ramifies) {
      rep.survivors = vacuous("s = " + std::to_string(rep.s) + ", j = " + std::to_string(top.j));
      rep.next_height = rep.survivors;
      rep.height_cap = rep.survivors;
      reports.push_back(std::move(rep));
      continue;
    }

    const long j = top.j;
    const long t = std::max(1L, j - (rep.s - 1));
    const unsigned drop = static_cast<unsigned>(j - t);
    const Rat qi = top.i + Rat(drop) * mu;
    const Rat& c = e.step.c;
    const Rat a_top = e.before.a.coeff(top.i, top.j);
    const Rat b_top = e.before.b.coeff(top.i + Rat(1), top.j - 1);
    const Rat c_pow = c.pow(drop);
    const Rat want_a =
        c_pow * (binomial(top.j, drop) * a_top + mu * binomial(top.j - 1, drop - 1) * b_top);
    const Rat want_b = c_pow * binomial(top.j - 1, drop) * b_top;
    const Rat got_a = e.after.a.coeff(qi, static_cast<unsigned>(t));
    const Rat got_b = e.after.b.coeff(qi + Rat(1), static_cast<unsigned>(t - 1));

    auto in_cloud = [&](const CloudPoint& p) {
      return std::binary_search(after_cloud.begin(), after_cloud.end(), p);
    };
    const bool keeps_top = in_cloud(top);
    const bool gains_q = in_cloud(CloudPoint{qi, static_cast<unsigned>(t)});
    std::ostringstream d;
    d << "P=" << point_str(top.i, j) << " Q=" << point_str(qi, t) << " dx " << got_a << " (want "
      << want_a << ") dy " << got_b << " (want " << want_b << ")";
    if (keeps_top && gains_q && got_a == want_a && got_b == want_b)
      rep.survivors = pass(d.str());
    else
      rep.survivors = fail(d.str() + (keeps_top ? "" : " P lost") + (gains_q ? "" : " Q missing"));

    const long next = rep.next;
    const std::string heights = "next height " + std::to_string(next) + ", j-(s-1) = " +
                                std::to_string(j - (rep.s - 1)) + ", t = " + std::to_string(t);
    rep.next_height = (next == j - (rep.s - 1) || next == 1) ? pass(heights) : fail(heights);
    rep.height_cap = next <= t ? pass(heights) : fail(heights);
    reports.push_back(std::move(rep));
  }
  return reports;
}

BoundReport verify_bound(const OneForm& w, std::span<const PuiseuxBranch> branches) {
  BoundReport rep;
  for (const auto& br : branches) rep.max_r = std::max(rep.max_r, br.r);
  rep.y_order = y_order(w);
  rep.multiplicity = multiplicity(w);
  rep.ok = rep.max_r <= rep.y_order && rep.y_order <= rep.multiplicity;
  return rep;
}

}  // namespace puiseux
