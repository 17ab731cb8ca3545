#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qosp/laurent.hpp"
#include "qosp/ratfunc.hpp"

using namespace qosp;

namespace {

const std::vector<std::string> kPRS{"p", "r", "s"};
const std::vector<std::string> kT{"t"};

LaurentPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars,
                        int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expd(-3, 3);
  std::uniform_int_distribution<int> numd(-9, 9);
  std::uniform_int_distribution<int> dend(1, 4);
  LaurentPoly out(vars);
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    LaurentPoly::Exponents e(vars.size());
    for (auto& x : e) {
      x = expd(rng);
    }
    Rational c(numd(rng), dend(rng));
    c.canonicalize();
    out += LaurentPoly::monomial(vars, e, c);
  }
  return out;
}

Rational nonzero_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> numd(-9, 9);
  std::uniform_int_distribution<int> dend(1, 4);
  Rational c(0);
  while (c == 0) {
    c = Rational(numd(rng), dend(rng));
    c.canonicalize();
  }
  return c;
}

}  // namespace

TEST_CASE("laurent addition: cancellation and identities") {
  auto q = LaurentPoly::variable(kT, "t");  // stand-in single variable
  auto one = LaurentPoly::constant(kT, Rational(1));
  // (1 - q) + q = 1
  CHECK((one - q) + q == one);
  // 0 + x = x
  auto zero = LaurentPoly(kT);
  auto x = LaurentPoly::monomial(kT, {-2}, Rational(5, 3));
  CHECK(zero + x == x);
  // (q^-1 + 1) + (-q^-1) = 1
  auto qinv = LaurentPoly::monomial(kT, {-1}, Rational(1));
  CHECK((qinv + one) + (-qinv) == one);
}

TEST_CASE("laurent multiplication: unit pair, difference of squares, telescoping") {
  auto q = LaurentPoly::variable(kT, "t");
  auto one = LaurentPoly::constant(kT, Rational(1));
  auto qinv = LaurentPoly::monomial(kT, {-1}, Rational(1));
  CHECK(q * qinv == one);
  auto q2 = LaurentPoly::monomial(kT, {2}, Rational(1));
  CHECK((one - q) * (one + q) == one - q2);
  auto q3 = LaurentPoly::monomial(kT, {3}, Rational(1));
  CHECK((one + q + q2) * (one - q) == one - q3);
}

TEST_CASE("ring axioms on randomized triples") {
  std::mt19937_64 rng(20260819);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_poly(rng, kPRS);
    auto b = random_poly(rng, kPRS);
    auto c = random_poly(rng, kPRS);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("evaluate is a ring homomorphism") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_poly(rng, kPRS);
    auto b = random_poly(rng, kPRS);
    std::map<std::string, Rational> assign{
        {"p", nonzero_rational(rng)}, {"r", nonzero_rational(rng)}, {"s", nonzero_rational(rng)}};
    CHECK((a * b).evaluate(assign) == a.evaluate(assign) * b.evaluate(assign));
    CHECK((a + b).evaluate(assign) == a.evaluate(assign) + b.evaluate(assign));
  }
}

TEST_CASE("evaluate examples and pole error") {
  auto q = LaurentPoly::variable(kT, "t");
  auto one = LaurentPoly::constant(kT, Rational(1));
  auto q2 = LaurentPoly::monomial(kT, {2}, Rational(1));
  std::map<std::string, Rational> at2{{"t", Rational(2)}};
  CHECK((one + q + q2).evaluate(at2) == Rational(7));
  auto qinv = LaurentPoly::monomial(kT, {-1}, Rational(1));
  CHECK(qinv.evaluate(at2) == Rational(1, 2));
  std::map<std::string, Rational> at0{{"t", Rational(0)}};
  CHECK_THROWS_AS(qinv.evaluate(at0), ScalarError);
  CHECK(q.evaluate(at0) == Rational(0));  // nonnegative exponents are fine at 0
}

TEST_CASE("context mismatch raises") {
  auto a = LaurentPoly::constant(kPRS, Rational(1));
  auto b = LaurentPoly::constant(kT, Rational(1));
  CHECK_THROWS_AS(a + b, ScalarError);
  CHECK_THROWS_AS(a * b, ScalarError);
}

TEST_CASE("specialization: p->t, s->t^-1, r->1 and classical limit") {
  std::map<std::string, LaurentPoly::Image> spec{
      {"p", {{1}, Rational(1)}}, {"r", {{0}, Rational(1)}}, {"s", {{-1}, Rational(1)}}};
  auto p2 = LaurentPoly::monomial(kPRS, {2, 0, 0}, Rational(1));
  CHECK(p2.substitute(kT, spec) == LaurentPoly::monomial(kT, {2}, Rational(1)));
  // p / (s r) -> t^2
  auto p_over_sr = LaurentPoly::monomial(kPRS, {1, -1, -1}, Rational(1));
  CHECK(p_over_sr.substitute(kT, spec) == LaurentPoly::monomial(kT, {2}, Rational(1)));
  // classical limit: every monomial collapses to its coefficient
  std::map<std::string, LaurentPoly::Image> classical{
      {"p", {{0}, Rational(1)}}, {"r", {{0}, Rational(1)}}, {"s", {{0}, Rational(1)}}};
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_poly(rng, kPRS);
    auto cl = a.substitute(kT, classical);
    CHECK(cl.is_constant());
    CHECK(cl.constant_value() ==
          a.evaluate({{"p", Rational(1)}, {"r", Rational(1)}, {"s", Rational(1)}}));
  }
}

TEST_CASE("serialization format") {
  auto m = LaurentPoly::monomial(kPRS, {2, -1, 0}, Rational(-3, 2));
  CHECK(m.to_string() == "-3/2 * p^2 r^-1");
  auto s = LaurentPoly::variable(kPRS, "s");
  CHECK((m + s).to_string() == "s - 3/2 * p^2 r^-1");
  CHECK(LaurentPoly(kPRS).to_string() == "0");
  CHECK(LaurentPoly::constant(kPRS, Rational(7)).to_string() == "7");
  auto t2 = LaurentPoly::monomial(kT, {2}, Rational(1));
  CHECK((LaurentPoly::constant(kT, Rational(1)) + t2).to_string() == "1 + t^2");
  CHECK((-t2).to_string() == "-t^2");
}

TEST_CASE("ratfunc equality via cross-multiplication") {
  auto one = LaurentPoly::constant(kT, Rational(1));
  auto q = LaurentPoly::variable(kT, "t");
  auto q2 = LaurentPoly::monomial(kT, {2}, Rational(1));
  auto q3 = LaurentPoly::monomial(kT, {3}, Rational(1));
  auto qinv = LaurentPoly::monomial(kT, {-1}, Rational(1));
  CHECK(ratfunc_eq(RatFunc(one - q2, one - q), RatFunc(one + q)));
  CHECK(ratfunc_eq(RatFunc(q, one), RatFunc(one, qinv)));
  CHECK_FALSE(ratfunc_eq(RatFunc(one - q3, one - q), RatFunc(one + q)));
}

TEST_CASE("ratfunc is an equivalence relation on randomized triples") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    auto n1 = random_poly(rng, kT);
    LaurentPoly d1(kT), d2(kT), d3(kT);
    while (d1.is_zero()) d1 = random_poly(rng, kT);
    while (d2.is_zero()) d2 = random_poly(rng, kT);
    while (d3.is_zero()) d3 = random_poly(rng, kT);
    // a, b, c all equivalent by construction
    RatFunc a(n1 * d2, d1 * d2);
    RatFunc b(n1 * d3, d1 * d3);
    RatFunc c(n1, d1);
    CHECK(ratfunc_eq(a, a));
    CHECK(ratfunc_eq(a, b));
    CHECK(ratfunc_eq(b, a));
    CHECK((ratfunc_eq(a, b) && ratfunc_eq(b, c)) == ratfunc_eq(a, c));
  }
}

TEST_CASE("ratfunc arithmetic and canonical normalization") {
  auto one = LaurentPoly::constant(kT, Rational(1));
  auto q = LaurentPoly::variable(kT, "t");
  RatFunc half = RatFunc::constant(kT, Rational(1, 2));
  RatFunc f(one, one - q);
  CHECK(ratfunc_eq(f - f, RatFunc(LaurentPoly(kT))));
  CHECK(ratfunc_eq(f * half + f * half, f));
  CHECK(ratfunc_eq(f / f, RatFunc(one)));
  // canonical: denominator leading coefficient 1, common monomial removed
  RatFunc g(q * q, q * (one - q));
  CHECK(g.den().leading_coefficient() == 1);
  RatFunc h(q * q * Rational(3), q * Rational(6));
  CHECK(h.is_polynomial());
  CHECK(h.num() == q * Rational(1, 2));
  CHECK_THROWS_AS(RatFunc(one, LaurentPoly(kT)), ScalarError);
}

TEST_CASE("rational helpers") {
  CHECK(rational_from_string("-3/2") == Rational(-3, 2));
  CHECK(rational_from_string("7") == Rational(7));
  CHECK(rational_to_string(Rational(-3, 2)) == "-3/2");
  CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(rational_pow(Rational(5), 0) == Rational(1));
  CHECK_THROWS_AS(rational_from_string("abc"), ScalarError);
  CHECK_THROWS_AS(rational_pow(Rational(0), -1), ScalarError);
}
