#pragma once

#include <ostream>
#include <span>

#include "json.hpp"
#include "puiseux/checks.hpp"
#include "puiseux/oracle.hpp"

namespace puiseux::cli {

using Json = nlohmann::ordered_json;

/// Rationals are always strings: "p/q" reduced, "n" for integers.
Json to_json(const Rat& r);
Json to_json(const Valuation& v);
Json to_json(const CloudPoint& p);

/// {"cloud", "polygon": {"vertices", "sides"}, "y_order", "multiplicity"}.
Json polygon_report(const OneForm& w);
/// {"branches": [...], "notes", "truncated"}; each step carries its Phi.
Json expansion_report(const OneForm& w, const Expansion& ex);
/// {"max_r", "y_order", "multiplicity", "bound_ok", "verdict"}.
Json bound_report(const BoundReport& b);
Json lemma_report(const OneForm& w, const Expansion& ex);
Json case_report(const oracle::Case& c);

void print_polygon(std::ostream& out, const OneForm& w);
void print_expansion(std::ostream& out, const OneForm& w, const Expansion& ex);
void print_bound(std::ostream& out, const BoundReport& b);
/// Returns false when some step fails a required check.
bool print_lemmas(std::ostream& out, const OneForm& w, const Expansion& ex);
/// Two input lines (a, then b) followed by '#' comment lines with the
/// expected values, so the output can be fed back through --form.
void print_case(std::ostream& out, const oracle::Case& c);

/// y = sum c x^mu, e.g. "y = -x^(3/2) + 2*x^2".
std::string series_str(const PuiseuxBranch& br);

}  // namespace puiseux::cli
