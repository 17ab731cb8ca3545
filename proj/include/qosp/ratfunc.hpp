#pragma once

#include <string>

#include "qosp/laurent.hpp"

namespace qosp {

// Rational function as a normalized fraction of Laurent polynomials.
// Canonical form: the fraction is reduced by the largest common monomial
// factor and scaled so the denominator's leading coefficient (under the
// lexicographic term order) is 1. Equality is decided by cross-multiplication,
// so no polynomial gcd is required.
class RatFunc {
 public:
  RatFunc() = default;

  // p / 1
  explicit RatFunc(const LaurentPoly& p)
      : num_(p), den_(LaurentPoly::constant(p.vars(), Rational(1))) {}

  RatFunc(LaurentPoly num, LaurentPoly den);

  static RatFunc constant(std::vector<std::string> vars, const Rational& c) {
    return RatFunc(LaurentPoly::constant(std::move(vars), c));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& rhs) const;
  RatFunc operator-(const RatFunc& rhs) const;
  RatFunc operator*(const RatFunc& rhs) const;
  RatFunc operator/(const RatFunc& rhs) const;

  // True iff num*rhs.den == rhs.num*den as Laurent polynomials.
  bool equals(const RatFunc& rhs) const;

  Rational evaluate(const std::map<std::string, Rational>& assignment) const;

  std::string to_string() const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

inline bool ratfunc_eq(const RatFunc& a, const RatFunc& b) { return a.equals(b); }

}  // namespace qosp
