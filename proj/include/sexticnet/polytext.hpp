#pragma once

#include <string>
#include <vector>

#include "sexticnet/multipoly.hpp"

namespace sexticnet {

// Parse failure; carries the offending token for CLI diagnostics.
struct ParseError : std::invalid_argument {
    ParseError(const std::string& msg, std::string tok) : std::invalid_argument(msg), token(std::move(tok)) {}
    std::string token;
};

// Shared repo-wide polynomial grammar: sums of products of rationals,
// variables with optional ^exponent, and parenthesized subexpressions,
// e.g. "3*x0^2*x5 - 1/2*x1*x3" or "x0*x1*(x0+2*x1+3*x2)".  Whitespace is
// ignored.  Variables must come from `vars`; coefficients are rational.
MultiPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

// Canonical rendering: terms in descending graded-lex order, unit
// coefficients elided, exponent 1 elided.  parse(print(f)) == f.
std::string print_polynomial(const MultiPoly& f, const std::vector<std::string>& vars);

// Standard variable name sets.
std::vector<std::string> x_vars(int n);            // x0..x{n-1}
std::vector<std::string> y_vars(int n);            // y0..y{n-1}
std::vector<std::string> l_vars(int n);            // l0..l{n-1}
std::vector<std::string> with_t(std::vector<std::string> vars);

}  // namespace sexticnet
