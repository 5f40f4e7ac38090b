#include "doctest.h"
#include "puiseux/checks.hpp"
#include "puiseux/oracle.hpp"
#include "support.hpp"

using namespace puiseux;
using puiseux::testing::poly_of;
using Status = Check::Status;

namespace {

const OneForm kCusp{poly_of({{-3, 2, 0}}), poly_of({{2, 0, 1}})};
const OneForm kRadial{poly_of({{1, 0, 1}}), poly_of({{-1, 1, 0}})};

}  // namespace

TEST_CASE("trace_branch replays the steps") {
  const std::vector<std::pair<Rat, Rat>> g{{Rat(3, 2), 1}};
  const auto trace = trace_branch(kCusp, make_branch(g));
  REQUIRE(trace.size() == 1);
  CHECK(trace[0].before == kCusp);
  CHECK(trace[0].contact.kind == ContactKind::side);
  CHECK(trace[0].contact.tau == Rat(2));
  CHECK(trace[0].after == transform_form(kCusp, 1, Rat(3, 2)));
}

TEST_CASE("cusp step keeps P and gains the predicted point") {
  const std::vector<std::pair<Rat, Rat>> g{{Rat(3, 2), 1}};
  const auto reports = lemma_checks(trace_branch(kCusp, make_branch(g)));
  REQUIRE(reports.size() == 1);
  const auto& r = reports[0];
  CHECK(r.height == 2);
  CHECK(r.s == 2);
  CHECK(r.first_axis.status == Status::vacuous);
  CHECK(r.descent.status == Status::pass);
  CHECK(r.survivors.status == Status::pass);
  CHECK(r.survivors.detail.find("Q=(1/2,1)") != std::string::npos);
  CHECK(r.next_height.status == Status::pass);
  CHECK(r.height_cap.status == Status::pass);
  CHECK(r.ok());
}

TEST_CASE("steps without ramification leave the survivor check vacuous") {
  // f = (y - x)^2 - x^3 : steps y = x + ...
  const PuiseuxPoly f = (PuiseuxPoly::y() - PuiseuxPoly::x()).pow(2) - poly_of({{1, 3, 0}});
  const std::vector<std::pair<Rat, Rat>> g{{1, 1}, {Rat(3, 2), 1}};
  const auto reports = lemma_checks(trace_branch(differential(f), make_branch(g)));
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].s == 1);
  CHECK(reports[0].survivors.status == Status::vacuous);
  CHECK(reports[0].first_axis.status == Status::pass);
  CHECK(reports[1].survivors.status == Status::pass);
  for (const auto& r : reports) CHECK(r.ok());
}

TEST_CASE("radial step has no axis points") {
  const auto ex = expand_branches(kRadial);
  const auto reports = lemma_checks(trace_branch(kRadial, ex.branches.at(0)));
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].first_axis.status == Status::vacuous);
  CHECK(reports[0].descent.status == Status::vacuous);
  CHECK(reports[0].ok());
}

TEST_CASE("a second characteristic exponent lands below j-(s-1)") {
  // y = x^(3/2) + x^(7/4): the first step starts at height 4 with s = 2, and
  // the next contact sits at height 2, not at 3 or 1. The height cap holds.
  const std::vector<std::pair<long, Rat>> coeffs{{6, 1}, {7, 1}};
  const OneForm w = differential(oracle::branch_to_curve(coeffs, 4));
  const std::vector<std::pair<Rat, Rat>> g{{Rat(3, 2), 1}, {Rat(7, 4), 1}};
  const auto reports = lemma_checks(trace_branch(w, make_branch(g)));
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].height == 4);
  CHECK(reports[0].s == 2);
  CHECK(reports[0].next == 2);
  CHECK(reports[0].first_axis.status == Status::pass);
  CHECK(reports[0].descent.status == Status::pass);
  CHECK(reports[0].survivors.status == Status::pass);
  CHECK(reports[0].next_height.status == Status::fail);
  CHECK(reports[0].height_cap.status == Status::pass);
  CHECK(reports[1].height == 2);
  CHECK(reports[1].next_height.status == Status::pass);
}

TEST_CASE("verify_bound examples") {
  const auto cusp = verify_bound(kCusp, expand_branches(kCusp).branches);
  CHECK(cusp.max_r == 1);
  CHECK(cusp.y_order == 2);
  CHECK(cusp.multiplicity == 2);
  CHECK(cusp.ok);

  const auto radial = verify_bound(kRadial, expand_branches(kRadial).branches);
  CHECK(radial.max_r == 0);
  CHECK(radial.y_order == 1);
  CHECK(radial.multiplicity == 2);
  CHECK(radial.ok);

  const std::vector<std::pair<long, Rat>> coeffs{{6, 1}, {7, 1}};
  const OneForm w = differential(oracle::branch_to_curve(coeffs, 4));
  const auto two = verify_bound(w, expand_branches(w).branches);
  CHECK(two.max_r == 2);
  CHECK(two.y_order >= 2);
  CHECK(two.multiplicity >= two.y_order);
  CHECK(two.ok);

  // a fabricated branch list with too many exponents is caught
  PuiseuxBranch fake;
  fake.r = 3;
  const std::vector<PuiseuxBranch> fakes{fake};
  CHECK(!verify_bound(kCusp, fakes).ok);
}
