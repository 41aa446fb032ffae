#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qprove/polynomial.hpp"
#include "qprove/unary_sets.hpp"

namespace qprove {

// Parse failure carrying the byte offset of the offending token.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// expr := term ('+' term)* ; term := atom '*'* ;
// atom := '{' digits '}' | '(' expr ')'
// Whitespace is free; singleton literals must fit in 2^63 - 1.
SetExpr parse_set_expr(std::string_view text);

// Sum of products of integer literals and powers x<i>^<e>, with '*' as
// multiplication: "2*x1 + 3*x2 + 1", "x1^2 + 2", "7".  Variables are
// x1, x2, ...; arity is the largest index that occurs.
NonnegPolynomial parse_polynomial(std::string_view text);

}  // namespace qprove
