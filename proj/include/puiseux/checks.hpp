#pragma once

#include <span>
#include <string>
#include <vector>

#include "puiseux/expansion.hpp"

namespace puiseux {

/// One step of a replayed expansion: the form before, the support contact at
/// the step's exponent, the step, and the transformed form.
struct TraceEntry {
  OneForm before;
  SupportContact contact;
  BranchStep step;
  OneForm after;
};

/// Replays the steps of branch on w, recording each transformation.
std::vector<TraceEntry> trace_branch(const OneForm& w, const PuiseuxBranch& branch);

struct Check {
  enum class Status { pass, vacuous, fail };
  Status status = Status::vacuous;
  std::string detail;

  bool failed() const { return status == Status::fail; }
};

const char* to_string(Check::Status status);

/// Per-step verdicts of the structural facts the expansion relies on:
///   first_axis  every j = 0 point of the new cloud lies strictly right of tau;
///   descent     when the support line of the same co-slope touches the new
///               polygon along a side, the next contact's highest point is
///               strictly lower than the current one;
///   survivors   for a ramifying step (s > 1) from a highest point P = (i,j)
///               with j > 1, the new cloud keeps P and gains
///               Q = (i + (j-t) mu, t), t = max(1, j-(s-1)), with exactly the
///               predicted dx and dy coefficients;
///   next_height the next contact's highest point sits at height j-(s-1) or 1;
///   height_cap  the next contact's highest point sits at height <= t.
struct StepReport {
  std::size_t index = 0;
  Rat mu;
  unsigned height = 0;   // j of the contact's highest point
  long s = 1;            // q_after / q_before
  unsigned next = 0;     // j of the next contact's highest point
  Check first_axis;
  Check descent;
  Check survivors;
  Check next_height;
  Check height_cap;

  /// first_axis, descent, survivors and next_height all hold.
  bool ok() const {
    return !first_axis.failed() && !descent.failed() && !survivors.failed() && !next_height.failed();
  }
};

/// The next contact of the last step is the highest point of the support line
/// just past its exponent, i.e. the lowest point of that line's contact.
std::vector<StepReport> lemma_checks(std::span<const TraceEntry> trace);

struct BoundReport {
  unsigned max_r = 0;
  unsigned y_order = 0;
  unsigned multiplicity = 0;
  bool ok = false;  // max_r <= y_order <= multiplicity
};

BoundReport verify_bound(const OneForm& w, std::span<const PuiseuxBranch> branches);

}  // namespace puiseux
