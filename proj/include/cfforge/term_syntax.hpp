#ifndef CFFORGE_TERM_SYNTAX_HPP
#define CFFORGE_TERM_SYNTAX_HPP

// Micro-syntax for operator terms on the command line:
//
//   m=<order>: <polynomial in x>
//
// e.g. "m=1: nu + x^2" or "m=0: (nu+1)*x". The polynomial accepts + - * ^
// (non-negative integer exponents), parentheses, decimal or integer
// literals, division by constants, the imaginary unit `i` and any bound
// parameter name (nu, d1, d2, ...), which is substituted as an exact rational.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cfforge/poly_operator.hpp"

namespace cfforge {

class TermParseError : public std::invalid_argument {
 public:
  TermParseError(const std::string& message, std::size_t position);

  /// Zero-based column in the term text.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

using ParameterBindings = std::map<std::string, Rational, std::less<>>;

struct ParsedTerm {
  int order = 0;
  Poly coefficient;
};

ParsedTerm parse_term(std::string_view text, const ParameterBindings& bindings);

/// Parses just the polynomial part.
Poly parse_polynomial(std::string_view text, const ParameterBindings& bindings);

/// Sums the parsed terms into an x-space operator.
PolyDiffOperator parse_operator(const std::vector<std::string>& terms,
                                const ParameterBindings& bindings);

}  // namespace cfforge

#endif  // CFFORGE_TERM_SYNTAX_HPP
