#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qosp/laurent.hpp"

namespace qosp {

// Syntax error with a 1-based character position into the offending text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t position, bool at_end = false)
      : std::runtime_error(msg + " at position " + std::to_string(position)),
        position_(position),
        at_end_(at_end) {}

  size_t position() const { return position_; }
  bool at_end() const { return at_end_; }

 private:
  size_t position_;
  bool at_end_;
};

// An enveloping-algebra expression, flattened to a coefficient per word.
// Words are sequences of generator names; the empty word is the scalar part.
using ExprWord = std::vector<std::string>;
using ExprTerms = std::map<ExprWord, LaurentPoly>;

// Parses sums/differences of products over generator names, parameter
// variables, and rational literals. `*` is required around generator
// factors; juxtaposition is allowed between scalar factors ("p^2 r^-1").
// Powers: `name^int` (generators require a nonnegative exponent).
// Parentheses group subexpressions. When the parameter list is exactly
// {"t"} and `q` is not a generator, `q` is read as t^2.
ExprTerms parse_element(const std::string& text,
                        const std::vector<std::string>& generator_names,
                        const std::vector<std::string>& params);

// Scalar-only parse (no generators allowed); returns the value as a
// Laurent polynomial over `params`.
LaurentPoly parse_scalar(const std::string& text, const std::vector<std::string>& params);

// Scalar parse that additionally requires a single nonzero Laurent term.
LaurentPoly parse_scalar_monomial(const std::string& text,
                                  const std::vector<std::string>& params);

}  // namespace qosp
