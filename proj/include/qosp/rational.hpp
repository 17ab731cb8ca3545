#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qosp {

// Exact arbitrary-precision rational numbers. Canonical form (reduced,
// positive denominator) is maintained by GMP.
using Rational = mpq_class;

// Thrown when two scalar values from incompatible contexts (different
// variable lists) are combined, and for other scalar-layer misuse.
class ScalarError : public std::runtime_error {
 public:
  explicit ScalarError(const std::string& what) : std::runtime_error(what) {}
};

// Parses "n", "-n", or "n/d" (optionally signed). Throws ScalarError on
// malformed input or zero denominator.
Rational rational_from_string(const std::string& text);

// Canonical text form: "n" or "n/d" with d > 1.
std::string rational_to_string(const Rational& value);

// base**exponent with negative exponents allowed (base must be nonzero then).
Rational rational_pow(const Rational& base, long exponent);

}  // namespace qosp
