#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "puiseux/form.hpp"

namespace puiseux::cli {

/// Syntax error in a coefficient expression; pos is the 0-based column.
class ParseError : public Error {
 public:
  ParseError(std::size_t pos, const std::string& what);
  std::size_t pos() const { return pos_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t pos_;
  std::string reason_;
};

/// Polynomial in x, y with rational coefficients:
///   EXPR  := ['+'|'-'] TERM (('+'|'-') TERM)*
///   TERM  := COEFF? ('*'? ATOM)*
///   ATOM  := ('x'|'y') ('^' INT)? | '(' EXPR ')' ('^' INT)?
///   COEFF := INT ('/' POSINT)?
/// Whitespace is ignored. An empty (or all-blank) text is the zero polynomial.
PuiseuxPoly parse_poly(std::string_view text);

/// a dx + b dy. Rejects the zero form and forms that are not singular.
OneForm parse_form(std::string_view a_text, std::string_view b_text);

/// Prints p in the input language; parse_poly(format_poly(p)) == p for
/// integer-exponent p. The zero polynomial prints as "0".
std::string format_poly(const PuiseuxPoly& p);

}  // namespace puiseux::cli
