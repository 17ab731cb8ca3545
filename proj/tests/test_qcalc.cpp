#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qosp/qcalc.hpp"

using namespace qosp;

namespace {
const std::vector<std::string> kT{"t"};
LaurentPoly base_q() { return LaurentPoly::monomial(kT, {2}, Rational(1)); }     // q = t^2
LaurentPoly base_q2() { return LaurentPoly::monomial(kT, {4}, Rational(1)); }    // q^2 = t^4

Matrix<Rational> at_t1(const Matrix<LaurentPoly>& m) {
  return m.map(Rational(0), [](const LaurentPoly& p) {
    return p.evaluate({{"t", Rational(1)}});
  });
}
}  // namespace

TEST_CASE("qint: explicit small values") {
  auto q = base_q();
  CHECK(qint(0, q).is_zero());
  CHECK(qint(1, q).is_one());
  // [3] = 1 + q + q^2
  auto one = LaurentPoly::constant(kT, Rational(1));
  CHECK(qint(3, q) == one + q + q.pow(2));
  // [-1] = -q^-1
  CHECK(qint(-1, q) == -q.pow(-1));
  // non-monomial base is rejected
  CHECK_THROWS_AS(qint(2, one + q), ScalarError);
}

TEST_CASE("qint recurrences over n in -8..8") {
  for (const auto& base : {base_q(), base_q2()}) {
    auto one = LaurentPoly::constant(kT, Rational(1));
    for (int n = -8; n <= 8; ++n) {
      // [n+1] = 1 + base*[n]
      CHECK(qint(n + 1, base) == one + base * qint(n, base));
      // [n]*(1-base) = 1 - base^n
      CHECK(qint(n, base) * (one - base) == one - base.pow(n));
      // classical limit at t=1 equals n
      CHECK(qint(n, base).evaluate({{"t", Rational(1)}}) == qint_classical(n));
    }
  }
}

TEST_CASE("qint addition rule [a+b] = [a] + base^a [b]") {
  auto q = base_q();
  for (int a = -4; a <= 4; ++a) {
    for (int b = -4; b <= 4; ++b) {
      CHECK(qint(a + b, q) == qint(a, q) + q.pow(a) * qint(b, q));
    }
  }
}

TEST_CASE("jackson matrix: small bases") {
  auto q = base_q();
  SUBCASE("degree bound 1: x -> 1, constants -> 0") {
    auto d = jackson_matrix({1}, q);
    CHECK(d.at(0, 1).is_one());
    CHECK(d.at(0, 0).is_zero());
    CHECK(d.at(1, 0).is_zero());
    CHECK(d.at(1, 1).is_zero());
  }
  SUBCASE("degree bound 2: x^2 -> (1+q) x") {
    auto d = jackson_matrix({2}, q);
    auto one = LaurentPoly::constant(kT, Rational(1));
    CHECK(d.at(1, 2) == one + q);
  }
  SUBCASE("classical limit: ordinary differentiation matrix") {
    auto d = at_t1(jackson_matrix({3}, q));
    CHECK(d.at(0, 1) == Rational(1));
    CHECK(d.at(1, 2) == Rational(2));
    CHECK(d.at(2, 3) == Rational(3));
    CHECK(d.at(0, 2) == Rational(0));
  }
}

TEST_CASE("jackson matrix: product rule on monomial columns") {
  // D(x^{a+b}) carries [a+b] = [a] + q^a [b], column-consistent with qint.
  auto q = base_q();
  auto d = jackson_matrix({6}, q);
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      CHECK(d.at(a + b - 1, a + b) == qint(a, q) + q.pow(a) * qint(b, q));
    }
  }
}

TEST_CASE("mult_by_x matrix and composition identities") {
  auto q = base_q();
  const int n = 4;
  PolyBasis pn{n};
  auto x = mult_by_x_matrix(pn, pn, kT, /*truncate=*/true);
  auto d = jackson_matrix(pn, q);
  // x^0 -> x^1
  CHECK(x.at(1, 0).is_one());
  // (x*Dq)(x^k) = [k]_q x^k: diagonal matrix of q-integers
  auto xd = x * d;
  for (int k = 0; k <= n; ++k) {
    CHECK(xd.at(k, k) == qint(k, q));
    for (int j = 0; j <= n; ++j) {
      if (j != k) {
        CHECK(xd.at(k, j).is_zero());
      }
    }
  }
  // (x*Dq - [n]) annihilates x^n
  auto shift = Matrix<LaurentPoly>::identity(n + 1, LaurentPoly(kT),
                                             LaurentPoly::constant(kT, Rational(1)))
                   .scaled(qint(n, q));
  auto op = xd - shift;
  for (int i = 0; i <= n; ++i) {
    CHECK(op.at(i, n).is_zero());
  }
  // dimension guard without truncation
  CHECK_THROWS_AS(mult_by_x_matrix(pn, pn, kT, /*truncate=*/false), ScalarError);
  auto xgrow = mult_by_x_matrix(PolyBasis{2}, PolyBasis{3}, kT);
  CHECK(xgrow.rows() == 4);
  CHECK(xgrow.cols() == 3);
  CHECK(xgrow.at(3, 2).is_one());
}
