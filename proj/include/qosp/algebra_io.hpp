#pragma once

#include <string>

#include "qosp/algebra.hpp"

namespace qosp {

// Deterministic text form of a presentation: header lines
//   algebra: <name>
//   params: <var> <var> ...
//   generators: <name>:<b|f> <name>:<b|f> ...
//   partial: true            (only for non-total presentations)
// followed by one relation per line, sorted by the order indices of the
// stored (left, right) pair:
//   {A,B}_<coeff> = <rhs>    (antiquommutator)
//   [A,B]_<coeff> = <rhs>    (quommutator)
// Coefficients other than 1 are braced ({p r^-1 s^-1}); the right-hand side
// is 0 or a sum of (scalar) * word terms with words joined by '*'. Repaired
// relations carry a trailing "# repaired" marker. '#' starts a comment.
std::string serialize_algebra(const AlgebraSpec& spec);

// Inverse of serialize_algebra; accepts comments, blank lines, and any
// relation order. Throws AlgebraError with a "line N:" prefix on malformed
// input, and surfaces coverage/duplicate/parity diagnostics from
// AlgebraSpec::validate().
AlgebraSpec parse_algebra(const std::string& text);

AlgebraSpec load_algebra_file(const std::string& path);
void save_algebra_file(const AlgebraSpec& spec, const std::string& path);

}  // namespace qosp
