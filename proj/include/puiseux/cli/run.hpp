#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace puiseux::cli {

/// Runs one command line (without the program name):
///   polygon | expand | verify | check-lemmas  (--a EXPR --b EXPR | --form FILE) ...
///   gen --signature LIST --seed N
/// Returns 0 on success, 1 on a FAIL verdict, 2 on bad input or rejected
/// preconditions.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace puiseux::cli
