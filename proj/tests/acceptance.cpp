// End-to-end acceptance suite: seven numbered checks, one pass/fail line
// each, exit code = number of failed checks. Every comparison is exact
// (rational / Laurent-polynomial arithmetic); there are no tolerances.
//
// Check 5 is expected to fail in this build: the deformed quadratic slice
// of the five-generator superalgebra contains no non-identity element that
// acts as a scalar on the probed modules, and the classical slice's central
// family carries the scalar n(n+1) rather than the reference (2n+1)/4.
// The check runs the faithful comparison and reports the discrepancy in
// full rather than weakening the target; the detail lines below document
// exactly which sub-checks hold and which do not.

#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <qosp/algebra.hpp>
#include <qosp/central.hpp>
#include <qosp/qcalc.hpp>
#include <qosp/rep.hpp>
#include <qosp/rewrite.hpp>

using namespace qosp;

namespace {

struct Criterion {
  int number = 0;
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& line) { notes.push_back(line); }
};

// ---------------------------------------------------------------------------
// 1. Symbolic relation verification across module sizes.

Criterion criterion1() {
  Criterion c{1, "all 32 relations hold symbolically on the modules n = 1..6"};
  const AlgebraSpec spec = builtin_osp22_q();
  for (int n = 1; n <= 6; ++n) {
    const VerificationReport report = verify_all(spec, build_osp22_rep(n));
    c.require(report.relations_checked == 32,
              "n=" + std::to_string(n) + ": expected 32 relations, saw " +
                  std::to_string(report.relations_checked));
    c.require(report.ok(), "n=" + std::to_string(n) + ": " +
                               std::to_string(report.failures.size()) +
                               " relations left a nonzero residual");
  }
  if (c.pass) c.note("28 pair relations + 4 squares, residual matrices exactly zero");
  return c;
}

// ---------------------------------------------------------------------------
// 2. Deviation oracle: literal vs repaired relation table and fermion
//    normalization, measured against the matrices.

Criterion criterion2() {
  Criterion c{2, "deviation oracle: the repaired table holds, the literal one does not"};
  const AlgebraSpec spec_q = builtin_osp22_q();
  const auto images = specialization_images_q();

  const std::set<std::string> expected_literal_failures{
      "E22,V1", "E21,V2", "E22,Vb1", "E12,Vb2", "E22,E21", "E22,E12", "E12,E21"};

  for (int n = 1; n <= 3; ++n) {
    const RepSet repaired = build_osp22_rep(n, FermionVariant::Repaired);
    const RepSet literal = build_osp22_rep(n, FermionVariant::Literal);

    const VerificationReport ok_report = verify_all(spec_q, repaired);
    c.require(ok_report.ok(),
              "repaired variant fails at n=" + std::to_string(n));

    const VerificationReport bad_report = verify_all(spec_q, literal);
    std::set<std::string> failed_ids;
    for (const auto& f : bad_report.failures) failed_ids.insert(f.relation_id);
    c.require(failed_ids == expected_literal_failures,
              "literal fermion normalization: unexpected failure set at n=" +
                  std::to_string(n));

    // Relation-level oracle: both repaired reassignments leave a zero
    // residual on the repaired matrices; both literal assignments do not.
    const Relation lit_cross =
        specialize_relation(literal_fourth_cross_relation(), {"t"}, images);
    const Relation rep_cross =
        specialize_relation(repaired_fourth_cross_relation(), {"t"}, images);
    const Relation lit_quad =
        specialize_relation(literal_quadratic_pair_relation(), {"t"}, images);
    const Relation rep_quad =
        specialize_relation(repaired_quadratic_pair_relation(), {"t"}, images);
    c.require(check_relation(rep_cross, repaired).is_zero(),
              "repaired fourth-cross relation has a residual at n=" + std::to_string(n));
    c.require(!check_relation(lit_cross, repaired).is_zero(),
              "literal fourth-cross relation unexpectedly holds at n=" + std::to_string(n));
    c.require(check_relation(rep_quad, repaired).is_zero(),
              "repaired quadratic-pair relation has a residual at n=" + std::to_string(n));
    c.require(!check_relation(lit_quad, repaired).is_zero(),
              "literal quadratic-pair relation unexpectedly holds at n=" + std::to_string(n));
  }

  // The frozen built-in table must carry exactly the repaired assignments,
  // flagged as such.
  const AlgebraSpec prs = builtin_osp22_prs();
  std::set<std::string> repaired_ids;
  for (const Relation& rel : prs.relations) {
    if (rel.provenance == Provenance::Repaired) repaired_ids.insert(rel.id());
  }
  c.require(repaired_ids == std::set<std::string>{"Vb2,V1", "E12,E21"},
            "built-in table's repaired-relation markers do not match the oracle");

  if (c.pass) {
    c.note("literal fourth fermion matrix deviates by the factor -q^2; with it the");
    c.note("repaired table fails exactly {E22,V1; E21,V2; E22,Vb1; E12,Vb2; E22,E21;");
    c.note("E22,E12; E12,E21} at every n tested");
    c.note("fourth cross bracket belongs to the pair (Vb2, V1), not (Vb2, V2);");
    c.note("the quadratic right-hand side belongs to (E12, E21), not (E22, E12)");
  }
  return c;
}

// ---------------------------------------------------------------------------
// 3. Confluence of the oriented system, plus a negative control.

Criterion criterion3() {
  Criterion c{3, "rewrite system is confluent (3-parameter and classical); "
                 "perturbation breaks it"};

  const RewriteSystem sys_prs(builtin_osp22_prs());
  const ConfluenceReport full = sys_prs.check_confluence();
  c.require(full.overlaps_total == 88,
            "expected 88 critical overlaps, saw " + std::to_string(full.overlaps_total));
  c.require(full.confluent(), "symbolic 3-parameter system has failing overlaps");

  const RewriteSystem sys_classical(builtin_osp22_classical());
  const ConfluenceReport classical = sys_classical.check_confluence();
  c.require(classical.confluent(), "classical limit has failing overlaps");

  AlgebraSpec perturbed = builtin_osp22_prs();
  perturb_coefficient(perturbed, "E22", "E21",
                      LaurentPoly::variable({"p", "r", "s"}, "s", 3));
  const ConfluenceReport broken = RewriteSystem(perturbed).check_confluence();
  c.require(!broken.confluent(),
            "perturbing one bracket coefficient left the system confluent");

  if (c.pass) {
    c.note("88/88 overlaps resolve symbolically over {p, r, s} and at p=r=s=1;");
    c.note("negative control (E22,E21 coefficient -> s^3) produces " +
           std::to_string(broken.failures.size()) + " failing overlaps");
  }
  return c;
}

// ---------------------------------------------------------------------------
// 4. The four fermionic matrices generate the full matrix algebra.

Criterion criterion4() {
  Criterion c{4, "fermion products span all (2n+1)^2 matrices for n = 1, 2, 3 at q = 2"};
  std::string lengths;
  for (int n = 1; n <= 3; ++n) {
    const SpanReport report = osp22_fermion_span(n, Rational(2), 4 * n + 2);
    const int full_rank = (2 * n + 1) * (2 * n + 1);
    c.require(report.saturated, "span did not saturate at n=" + std::to_string(n));
    c.require(!report.ranks_by_word_length.empty() &&
                  report.ranks_by_word_length.back() == full_rank,
              "final rank != " + std::to_string(full_rank) + " at n=" + std::to_string(n));
    if (!lengths.empty()) lengths += ", ";
    lengths += "n=" + std::to_string(n) + ": length " +
               std::to_string(report.saturating_length);
  }
  if (c.pass) c.note("saturating word lengths — " + lengths);
  return c;
}

// ---------------------------------------------------------------------------
// 5. Five-generator superalgebra: irreducibility, and the search for a
//    quadratic element acting as the reference scalar.

Criterion criterion5() {
  Criterion c{5, "quadratic central element acting as -(1/2)[-n-1/2] on the modules"};
  const std::vector<int> probes{1, 2, 3, 4};

  // (a) Irreducibility: commutant dimension 1 on every probed module.
  bool commutant_ok = true;
  for (int n = 1; n <= 4; ++n) {
    if (osp12_commutant_dimension(n, Rational(2)) != 1) commutant_ok = false;
  }
  c.require(commutant_ok, "commutant dimension != 1 on some module");
  c.note(std::string("sub-check a (commutant dimension 1, n = 1..4, q = 2): ") +
         (commutant_ok ? "PASS" : "FAIL"));

  // (b) Deformed mode: a non-identity scalar-acting element in the
  // quadratic slice.
  const CentralSearchResult deformed = central_quadratic_search(probes, false);
  const bool deformed_found = deformed.has_non_identity();
  c.require(deformed_found,
            "no non-identity element of the deformed quadratic slice acts as a "
            "scalar on the probed modules");
  c.note(std::string("sub-check b (deformed slice contains a non-identity "
                     "scalar-acting element): ") +
         (deformed_found ? "PASS" : "FAIL"));
  c.note("  joint solution space has dimension " + std::to_string(deformed.solution_dim) +
         " = identity + " + std::to_string(deformed.null_dim) +
         " directions acting as zero; nothing else");

  // (c) Classical limit: the non-identity central family's scalar against
  // the reference value (2n+1)/4.
  const CentralSearchResult classical = central_quadratic_search(probes, true);
  bool classical_matches = classical.has_non_identity();
  if (classical_matches) {
    for (size_t k = 0; k < probes.size(); ++k) {
      const RatFunc ref = RatFunc::constant(
          {"t"}, casimir_reference_value_classical(probes[k]));
      if (!classical.primary().scalars[k].equals(ref)) classical_matches = false;
    }
  }
  c.require(classical_matches,
            "classical central element's scalar differs from (2n+1)/4");
  c.note(std::string("sub-check c (classical scalar equals (2n+1)/4): ") +
         (classical_matches ? "PASS" : "FAIL"));
  if (classical.has_non_identity()) {
    c.note("  classical slice does contain the central element " +
           classical.primary().element.to_string());
    c.note("  but it acts as n(n+1): scalars 2, 6, 12, 20 on n = 1..4, "
           "vs reference 3/4, 5/4, 7/4, 9/4");
  }

  // (d) The report must state one of {exact | affine | mismatch} rather
  // than silently renormalizing.
  const std::set<std::string> verdicts{"exact", "up_to_normalization", "mismatch"};
  const bool verdict_ok = verdicts.count(formula_match_name(deformed.match)) > 0 &&
                          verdicts.count(formula_match_name(classical.match)) > 0;
  c.require(verdict_ok, "three-way verdict missing from the search result");
  c.note(std::string("sub-check d (three-way verdict reported): ") +
         (verdict_ok ? "PASS" : "FAIL") + " — deformed: " +
         formula_match_name(deformed.match) + ", classical: " +
         formula_match_name(classical.match));

  // Context for the failure: the reference scalar IS attained classically,
  // but only with opposite signs on the two graded components.
  const ComponentScalarResult twisted = component_scalar_search(probes, true);
  if (twisted.reference_realized_with_sign_flip) {
    c.note("diagnostic: classically, -(1/2)H + Vm*Vp - 1/4 acts as "
           "diag(+(2n+1)/4, -(2n+1)/4) — the reference value appears as a "
           "parity-twisted action, not a central one");
  }
  const ComponentScalarResult twisted_def = component_scalar_search(probes, false);
  if (!twisted_def.reference_realized_with_sign_flip) {
    c.note("diagnostic: after deformation not even the parity-twisted "
           "realization survives inside the quadratic slice; a scalar-acting "
           "element requires operators outside it");
  }
  return c;
}

// ---------------------------------------------------------------------------
// 6. Rewrite-engine properties on a randomized corpus.

Criterion criterion6() {
  Criterion c{6, "normal form: idempotent, linear, strategy-independent, "
                 "specialization-compatible on 240 random words"};
  const RewriteSystem sys_prs(builtin_osp22_prs());
  const RewriteSystem sys_q(builtin_osp22_q());
  const auto images = specialization_images_q();

  std::mt19937 rng(987654321);
  std::uniform_int_distribution<int> gen_dist(0, 7);
  std::uniform_int_distribution<int> len_dist(1, 5);
  auto random_word = [&]() {
    IndexWord w(static_cast<size_t>(len_dist(rng)));
    for (int& g : w) g = gen_dist(rng);
    return w;
  };

  int words_checked = 0;
  int violations = 0;
  for (int trial = 0; trial < 120; ++trial) {
    Element a, b;
    element_add_term(a, random_word(), sys_prs.spec().one());
    element_add_term(b, random_word(),
                     LaurentPoly::variable({"p", "r", "s"}, "r", -1));
    words_checked += 2;

    const Element nf_a = sys_prs.normal_form(a);
    const Element nf_b = sys_prs.normal_form(b);
    if (sys_prs.normal_form(nf_a) != nf_a) ++violations;  // idempotence
    if (sys_prs.normal_form(element_add(a, b)) != element_add(nf_a, nf_b)) {
      ++violations;  // linearity
    }
    if (sys_prs.normal_form(a, default_step_budget(),
                            Strategy::RightmostInnermost) != nf_a) {
      ++violations;  // strategy independence
    }
    // Specializing p -> t, s -> t^-1, r -> 1 before or after reduction
    // must land on the same normal form.
    const Element spec_then_reduce =
        sys_q.normal_form(specialize_element(a, {"t"}, images));
    const Element reduce_then_spec =
        specialize_element(nf_a, {"t"}, images);
    if (spec_then_reduce != reduce_then_spec) ++violations;
  }

  c.require(words_checked >= 200, "corpus smaller than 200 words");
  c.require(violations == 0,
            std::to_string(violations) + " property violations on the corpus");
  if (c.pass) {
    c.note(std::to_string(words_checked) +
           " random words of length <= 5; all four properties exact");
  }
  return c;
}

// ---------------------------------------------------------------------------
// 7. Scalar layer: ring axioms and q-integer recurrences.

Criterion criterion7() {
  Criterion c{7, "scalar ring axioms and q-integer recurrences for n = -8..8"};
  const std::vector<std::string> prs{"p", "r", "s"};
  std::mt19937_64 rng(1234321);
  std::uniform_int_distribution<int> nterms(0, 4);
  std::uniform_int_distribution<int> expd(-3, 3);
  std::uniform_int_distribution<int> numd(-9, 9);
  std::uniform_int_distribution<int> dend(1, 4);

  auto random_poly = [&]() {
    LaurentPoly out(prs);
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
      LaurentPoly::Exponents e(prs.size());
      for (auto& x : e) x = expd(rng);
      Rational coeff(numd(rng), dend(rng));
      coeff.canonicalize();
      out += LaurentPoly::monomial(prs, e, coeff);
    }
    return out;
  };

  int violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_poly(), b = random_poly(), d = random_poly();
    if (!(a + b == b + a)) ++violations;
    if (!(a * b == b * a)) ++violations;
    if (!((a + b) + d == a + (b + d))) ++violations;
    if (!((a * b) * d == a * (b * d))) ++violations;
    if (!(a * (b + d) == a * b + a * d)) ++violations;
    if (!(a - a).is_zero()) ++violations;
  }
  c.require(violations == 0,
            std::to_string(violations) + " ring-axiom violations on random triples");

  const std::vector<std::string> t{"t"};
  const LaurentPoly one = LaurentPoly::constant(t, Rational(1));
  int recurrence_failures = 0;
  for (const int base_exp : {2, 4}) {
    const LaurentPoly base = LaurentPoly::variable(t, "t", base_exp);
    for (int n = -8; n <= 8; ++n) {
      if (!(qint(n + 1, base) == one + base * qint(n, base))) ++recurrence_failures;
      if (!(qint(n, base) * (one - base) == one - base.pow(n))) ++recurrence_failures;
      if (qint(n, base).evaluate({{"t", Rational(1)}}) != qint_classical(n)) {
        ++recurrence_failures;
      }
    }
  }
  c.require(recurrence_failures == 0,
            std::to_string(recurrence_failures) + " q-integer recurrence failures");

  if (c.pass) {
    c.note("200 random triples over {p, r, s}; [n+1] = 1 + q[n] and "
           "[n](1-q) = 1-q^n for bases t^2, t^4");
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<Criterion> results{criterion1(), criterion2(), criterion3(),
                                       criterion4(), criterion5(), criterion6(),
                                       criterion7()};
  int failed = 0;
  for (const Criterion& c : results) {
    std::printf("[%s] criterion %d: %s\n", c.pass ? "PASS" : "FAIL", c.number,
                c.title.c_str());
    for (const std::string& line : c.notes) {
      std::printf("    %s\n", line.c_str());
    }
    if (!c.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed,
              results.size());
  return failed;
}
