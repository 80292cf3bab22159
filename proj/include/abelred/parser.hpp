#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "abelred/bipoly.hpp"
#include "abelred/ode.hpp"

namespace abelred {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Polynomial in x, y: integer and rational literals (3/2), + - *, ^ or **
/// with nonnegative integer exponents, parentheses. '#' starts a comment.
BiPoly parse_poly(std::string_view text);

/// Accepts "expr / expr", "RATIO(expr, expr)" or "M = expr; N = expr"
/// (the separator may be ';' or a newline). Result is normalized.
InputODE parse_ode(std::string_view text);

/// "t*y' = rhs" or "y' = rhs" with t in x only and rhs polynomial in x, y,
/// e.g. "x*y' = x*y^3 + (-x - 1)*y^2". The result is not normalized.
ReducedODE parse_reduced(std::string_view text);

}  // namespace abelred
