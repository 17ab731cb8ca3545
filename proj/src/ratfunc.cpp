#include "qosp/ratfunc.hpp"

#include <algorithm>

namespace qosp {

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.vars() != den_.vars()) {
    throw ScalarError("incompatible scalar contexts in fraction");
  }
  if (den_.is_zero()) {
    throw ScalarError("zero denominator");
  }
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(num_.vars(), Rational(1));
    return;
  }
  // Remove the largest monomial dividing both numerator and denominator.
  LaurentPoly::Exponents mn = num_.min_exponents();
  LaurentPoly::Exponents md = den_.min_exponents();
  LaurentPoly::Exponents common(mn.size());
  bool shift = false;
  for (size_t i = 0; i < mn.size(); ++i) {
    common[i] = std::min(mn[i], md[i]);
    shift = shift || common[i] != 0;
  }
  if (shift) {
    num_ = num_.shifted(common);
    den_ = den_.shifted(common);
  }
  // Scale so the denominator's leading coefficient is 1.
  const Rational lead = den_.leading_coefficient();
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc RatFunc::operator+(const RatFunc& rhs) const {
  return RatFunc(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatFunc RatFunc::operator-(const RatFunc& rhs) const {
  return RatFunc(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RatFunc RatFunc::operator*(const RatFunc& rhs) const {
  return RatFunc(num_ * rhs.num_, den_ * rhs.den_);
}

RatFunc RatFunc::operator/(const RatFunc& rhs) const {
  if (rhs.num_.is_zero()) {
    throw ScalarError("division by zero rational function");
  }
  return RatFunc(num_ * rhs.den_, den_ * rhs.num_);
}

bool RatFunc::equals(const RatFunc& rhs) const {
  return num_ * rhs.den_ == rhs.num_ * den_;
}

Rational RatFunc::evaluate(const std::map<std::string, Rational>& assignment) const {
  const Rational d = den_.evaluate(assignment);
  if (d == 0) {
    throw ScalarError("evaluate: denominator vanishes at this assignment");
  }
  return num_.evaluate(assignment) / d;
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) {
    return num_.to_string();
  }
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace qosp
