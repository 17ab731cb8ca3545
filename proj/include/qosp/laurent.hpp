#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qosp/rational.hpp"

namespace qosp {

// Multivariate Laurent polynomial over a fixed, ordered list of variable
// names. Exponents may be negative. Canonical form: the term map never
// stores zero coefficients, so equal polynomials have identical maps.
//
// All binary operations require both operands to share the same variable
// list; a mismatch throws ScalarError.
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  // Zero polynomial over an empty variable list.
  LaurentPoly() = default;

  // Zero polynomial over the given variables.
  explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static LaurentPoly constant(std::vector<std::string> vars, const Rational& c);
  static LaurentPoly monomial(std::vector<std::string> vars, Exponents exps,
                              const Rational& c);
  // The single variable `name` (to the power `exp`) within the context `vars`.
  static LaurentPoly variable(const std::vector<std::string>& vars,
                              const std::string& name, int exp = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  // Exactly one stored term (a nonzero scalar multiple of a single monomial).
  bool is_monomial() const { return terms_.size() == 1; }
  // Value of a constant polynomial (zero if empty).
  Rational constant_value() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  LaurentPoly operator*(const Rational& c) const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  bool operator==(const LaurentPoly& rhs) const;
  bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

  // Integer power; negative exponents require a single-term polynomial.
  LaurentPoly pow(int k) const;
  // Multiplicative inverse; only single-term polynomials are invertible.
  LaurentPoly inverse() const;

  // Exact evaluation. Every variable must be assigned; a zero value is only
  // allowed for variables that never occur with a negative exponent.
  Rational evaluate(const std::map<std::string, Rational>& assignment) const;

  // Variable substitution into a new context: each old variable is replaced
  // by coeff * (monomial in new_vars). Used for parameter specializations
  // and classical limits.
  struct Image {
    Exponents exps;   // exponent vector over the new variable list
    Rational coeff;   // nonzero
  };
  LaurentPoly substitute(const std::vector<std::string>& new_vars,
                         const std::map<std::string, Image>& images) const;

  // Deterministic human-readable form, terms ordered lexicographically by
  // exponent vector, e.g. "-3/2 * p^2 r^-1 + s".
  std::string to_string() const;

  // Lexicographically greatest exponent vector (the polynomial must be
  // nonzero); used for canonical fraction normalization.
  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;

  // Componentwise minimum of all exponent vectors (polynomial must be
  // nonzero): the largest monomial dividing every term.
  Exponents min_exponents() const;
  // Divides by the monomial with the given exponent vector (exact for
  // Laurent polynomials).
  LaurentPoly shifted(const Exponents& by) const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  void require_same_context(const LaurentPoly& rhs) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

inline LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
  return p * c;
}

}  // namespace qosp
