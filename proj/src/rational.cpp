#include "qosp/rational.hpp"

namespace qosp {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) {
    throw ScalarError("empty rational literal");
  }
  mpq_t raw;
  mpq_init(raw);
  if (mpq_set_str(raw, text.c_str(), 10) != 0) {
    mpq_clear(raw);
    throw ScalarError("malformed rational literal: '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(raw)) == 0) {
    mpq_clear(raw);
    throw ScalarError("zero denominator in rational literal: '" + text + "'");
  }
  mpq_canonicalize(raw);
  Rational out(raw);
  mpq_clear(raw);
  return out;
}

std::string rational_to_string(const Rational& value) {
  return value.get_str();
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent == 0) {
    return Rational(1);
  }
  if (base == 0 && exponent < 0) {
    throw ScalarError("negative power of zero");
  }
  Rational acc(1);
  Rational b = base;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-(exponent + 1)) + 1UL
                                 : static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1UL) {
      acc *= b;
    }
    b *= b;
    e >>= 1UL;
  }
  if (exponent < 0) {
    acc = Rational(1) / acc;
  }
  return acc;
}

}  // namespace qosp
