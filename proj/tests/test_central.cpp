#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qosp/central.hpp"
#include "qosp/linalg.hpp"

using namespace qosp;

namespace {

const std::vector<int> kProbes{1, 2, 3, 4};

RatFunc constant(const Rational& c) { return RatFunc::constant({"t"}, c); }

}  // namespace

TEST_CASE("reference value: closed form, classical limit, guards") {
  // C(n) = -(1/2)(1 - t^{-2(2n+1)})/(1 - t^4), evaluated at a few points.
  const std::map<std::string, Rational> at2{{"t", Rational(2)}};
  // n=1, t=2: -(1/2)(1 - 2^-6)/(1 - 2^4) = (1/2)(63/64)/15 = 21/640.
  CHECK(casimir_reference_value(1).evaluate(at2) == Rational(21, 640));
  // n=2, t=2: (1/2)(1 - 2^-10)/15 = 1023/30720 = 341/10240.
  CHECK(casimir_reference_value(2).evaluate(at2) == Rational(341, 10240));

  CHECK(casimir_reference_value_classical(1) == Rational(3, 4));
  CHECK(casimir_reference_value_classical(2) == Rational(5, 4));
  CHECK(casimir_reference_value_classical(3) == Rational(7, 4));
  CHECK(casimir_reference_value_classical(4) == Rational(9, 4));

  CHECK_THROWS_AS(casimir_reference_value(0), CentralError);
  CHECK_THROWS_AS(casimir_reference_value_classical(0), CentralError);
}

TEST_CASE("quadratic word list is deterministic") {
  const auto words = quadratic_words();
  REQUIRE(words.size() == 31);
  CHECK(words[0].empty());
  CHECK(words[1] == std::vector<std::string>{"H"});
  CHECK(words[5] == std::vector<std::string>{"Vp"});
  CHECK(words[6] == std::vector<std::string>{"H", "H"});
  CHECK(words[30] == std::vector<std::string>{"Vp", "Vp"});
}

TEST_CASE("probe validation") {
  CHECK_THROWS_AS(central_quadratic_search({}), CentralError);
  CHECK_THROWS_AS(central_quadratic_search({0}), CentralError);
  CHECK_THROWS_AS(central_quadratic_search({2, 2}), CentralError);
  CHECK_THROWS_AS(central_quadratic_search({3, 1}), CentralError);
}

TEST_CASE("classical joint search finds the quadratic invariant with eigenvalue n(n+1)") {
  const CentralSearchResult r = central_quadratic_search(kProbes, true);
  CHECK(r.mode == "classical");
  CHECK(r.solution_dim == 14);
  CHECK(r.null_dim == 12);
  CHECK(r.scalar_dim() == 2);
  CHECK(r.has_non_identity());

  // The identity direction is reported first and acts as 1 everywhere.
  CHECK(r.directions[0].element.is_identity_only());
  for (const RatFunc& s : r.directions[0].scalars) {
    CHECK(ratfunc_eq(s, constant(Rational(1))));
  }

  const CentralDirection& casimir = r.primary();
  CHECK(casimir.element.to_string() == "H + H*H + -1*Jm*Jp + 2*Vm*Vp");
  for (size_t k = 0; k < kProbes.size(); ++k) {
    const int n = kProbes[k];
    CHECK(ratfunc_eq(casimir.scalars[k], constant(Rational(n * (n + 1)))));
  }

  // n(n+1) never equals (2n+1)/4, even after affine renormalization.
  CHECK(r.match == FormulaMatch::Mismatch);
}

TEST_CASE("deformed joint search finds no non-identity direction at all") {
  const CentralSearchResult r = central_quadratic_search(kProbes, false);
  CHECK(r.mode == "symbolic");
  CHECK(r.solution_dim == 13);
  CHECK(r.null_dim == 12);
  CHECK(r.scalar_dim() == 1);
  CHECK_FALSE(r.has_non_identity());
  CHECK_THROWS_AS(r.primary(), CentralError);
  CHECK(r.match == FormulaMatch::Mismatch);
}

TEST_CASE("single-module solution space = evaluation kernel + identity line") {
  for (int n = 1; n <= 2; ++n) {
    // Independent count of the kernel: rank of the 31 word images at q = 2.
    RepSet reps = build_osp12_rep(n);
    const int dim = reps.dim();
    RowBasis basis(dim * dim);
    int rank = 0;
    for (const auto& word : quadratic_words()) {
      PolyMatrix m = PolyMatrix::identity(dim, LaurentPoly({"t"}),
                                          LaurentPoly::constant({"t"}, Rational(1)));
      for (const auto& g : word) m = m * reps.at(g);
      std::vector<Rational> row;
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
          row.push_back(evaluate_even_powers(m.at(i, j), Rational(2)));
        }
      }
      if (basis.insert(row)) ++rank;
    }
    const CentralSearchResult single = central_quadratic_search({n}, false);
    // Irreducibility: everything that commutes acts as a scalar, so the
    // solutions are the kernel plus one scalar line.
    CHECK(single.solution_dim == 31 - rank + 1);
    CHECK(single.null_dim == single.solution_dim - 1);
    CHECK(single.scalar_dim() == 1);
  }
  // At n=1 the quadratic words span the whole 3x3 algebra, so the kernel is
  // 22-dimensional and non-identity commuting elements certainly exist.
  CHECK(central_quadratic_search({1}, false).solution_dim == 23);
}

TEST_CASE("component-scalar search: classical structure and the sign-flipped reference") {
  const ComponentScalarResult r = component_scalar_search(kProbes, true);
  CHECK(r.mode == "classical");
  CHECK(r.solution_dim == 15);
  CHECK(r.null_dim == 12);
  REQUIRE(r.directions.size() == 3);

  CHECK(r.directions[0].element.is_identity_only());

  // diag(n^2 - 1, (n+1)^2 - 1)
  CHECK(r.directions[1].element.to_string() == "2*H + H*H + -1*Jm*Jp");
  // diag(-(n+1), n)
  CHECK(r.directions[2].element.to_string() == "H + -2*Vm*Vp");
  for (size_t k = 0; k < kProbes.size(); ++k) {
    const int n = kProbes[k];
    CHECK(ratfunc_eq(r.directions[1].upper_scalars[k], constant(Rational(n * n - 1))));
    CHECK(ratfunc_eq(r.directions[1].lower_scalars[k], constant(Rational((n + 1) * (n + 1) - 1))));
    CHECK(ratfunc_eq(r.directions[2].upper_scalars[k], constant(Rational(-(n + 1)))));
    CHECK(ratfunc_eq(r.directions[2].lower_scalars[k], constant(Rational(n))));
  }

  // The reference value IS realised classically as a parity pair:
  // -(1/4) - (1/2)(H - 2 Vm*Vp) acts as diag(+(2n+1)/4, -(2n+1)/4).
  CHECK(r.reference_realized_with_sign_flip);
  for (size_t k = 0; k < kProbes.size(); ++k) {
    const int n = kProbes[k];
    const Rational upper = Rational(-1, 4) - Rational(1, 2) * Rational(-(n + 1));
    const Rational lower = Rational(-1, 4) - Rational(1, 2) * Rational(n);
    CHECK(upper == casimir_reference_value_classical(n));
    CHECK(lower == -casimir_reference_value_classical(n));
  }

  // Consistency across the two searches: the central invariant's scalar is
  // the difference of the two component directions' scalars.
  const CentralSearchResult central = central_quadratic_search(kProbes, true);
  const CentralDirection& casimir = central.primary();
  for (size_t k = 0; k < kProbes.size(); ++k) {
    const RatFunc diff_upper = r.directions[1].upper_scalars[k] - r.directions[2].upper_scalars[k];
    const RatFunc diff_lower = r.directions[1].lower_scalars[k] - r.directions[2].lower_scalars[k];
    CHECK(ratfunc_eq(diff_upper, casimir.scalars[k]));
    CHECK(ratfunc_eq(diff_lower, casimir.scalars[k]));
  }
}

TEST_CASE("component-scalar search: nothing non-trivial survives deformation") {
  const ComponentScalarResult r = component_scalar_search(kProbes, false);
  CHECK(r.solution_dim == 13);
  CHECK(r.null_dim == 12);
  CHECK(r.directions.size() == 1);
  CHECK(r.directions[0].element.is_identity_only());
  CHECK_FALSE(r.reference_realized_with_sign_flip);
}

TEST_CASE("per-module report shape") {
  const CasimirReport classical = casimir_report(2, true);
  CHECK(classical.n == 2);
  CHECK(classical.mode == "classical");
  CHECK(classical.central_space_dim == 2);
  REQUIRE(classical.scalars.size() == 2);
  CHECK(classical.scalars[0] == "1");
  CHECK(classical.scalars[1] == "6");
  CHECK(classical.match == FormulaMatch::Mismatch);
  CHECK(formula_match_name(classical.match) == "mismatch");

  const CasimirReport symbolic = casimir_report(1, false);
  CHECK(symbolic.mode == "symbolic");
  CHECK(symbolic.central_space_dim == 1);
  REQUIRE(symbolic.scalars.size() == 1);
  CHECK(symbolic.scalars[0] == "1");
  CHECK(symbolic.match == FormulaMatch::Mismatch);

  CHECK_THROWS_AS(casimir_report(0), CentralError);

  // A probe list extended past 4 keeps the classical invariant.
  const CasimirReport wide = casimir_report(5, true);
  CHECK(wide.central_space_dim == 2);
  CHECK(wide.scalars[1] == "30");  // n(n+1) at n = 5
}

TEST_CASE("match names") {
  CHECK(formula_match_name(FormulaMatch::Exact) == "exact");
  CHECK(formula_match_name(FormulaMatch::UpToNormalization) == "up_to_normalization");
  CHECK(formula_match_name(FormulaMatch::Mismatch) == "mismatch");
}
