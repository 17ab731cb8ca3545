// Serial and OpenMP-parallel kernel paths must produce identical results.
// Every comparison here runs the same computation twice — once with the
// parallel flag, once forced serial — and demands field-by-field equality,
// including failure lists produced by perturbed presentations.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qosp/algebra.hpp>
#include <qosp/parallel.hpp>
#include <qosp/rep.hpp>
#include <qosp/rewrite.hpp>

using namespace qosp;

namespace {

// Restores the global parallel switch on scope exit so test order
// cannot leak a disabled state into later cases.
struct ParallelGuard {
  bool saved;
  ParallelGuard() : saved(parallel::enabled()) {}
  ~ParallelGuard() { parallel::enabled() = saved; }
};

void check_same_report(const VerificationReport& a, const VerificationReport& b) {
  CHECK(a.algebra == b.algebra);
  CHECK(a.n == b.n);
  CHECK(a.mode == b.mode);
  CHECK(a.relations_checked == b.relations_checked);
  REQUIRE(a.failures.size() == b.failures.size());
  for (size_t i = 0; i < a.failures.size(); ++i) {
    CHECK(a.failures[i].relation_id == b.failures[i].relation_id);
    REQUIRE(a.failures[i].residual_entries.size() == b.failures[i].residual_entries.size());
    for (size_t j = 0; j < a.failures[i].residual_entries.size(); ++j) {
      CHECK(a.failures[i].residual_entries[j].row == b.failures[i].residual_entries[j].row);
      CHECK(a.failures[i].residual_entries[j].col == b.failures[i].residual_entries[j].col);
      CHECK(a.failures[i].residual_entries[j].value == b.failures[i].residual_entries[j].value);
    }
  }
}

void check_same_confluence(const ConfluenceReport& a, const ConfluenceReport& b) {
  CHECK(a.algebra == b.algebra);
  CHECK(a.parameter_mode == b.parameter_mode);
  CHECK(a.overlaps_total == b.overlaps_total);
  REQUIRE(a.failures.size() == b.failures.size());
  for (size_t i = 0; i < a.failures.size(); ++i) {
    CHECK(a.failures[i].overlap == b.failures[i].overlap);
    CHECK(a.failures[i].residual == b.failures[i].residual);
  }
}

}  // namespace

TEST_CASE("global switch is mutable and the thread count is sane") {
  ParallelGuard guard;
  CHECK(parallel::max_threads() >= 1);

  parallel::enabled() = false;
  CHECK_FALSE(parallel::enabled());
  parallel::enabled() = true;
  CHECK(parallel::enabled());
}

TEST_CASE("relation verification: parallel equals serial on clean input") {
  ParallelGuard guard;
  parallel::enabled() = true;
  const AlgebraSpec spec = builtin_osp22_q();
  for (int n = 1; n <= 4; ++n) {
    const RepSet reps = build_osp22_rep(n);
    const VerificationReport par = verify_all(spec, reps, /*parallel=*/true);
    const VerificationReport ser = verify_all(spec, reps, /*parallel=*/false);
    CHECK(par.ok());
    check_same_report(par, ser);
  }
}

TEST_CASE("relation verification: parallel equals serial on failing input") {
  ParallelGuard guard;
  parallel::enabled() = true;
  AlgebraSpec spec = builtin_osp22_q();
  // Break one bracket coefficient so several relations fail with residuals.
  perturb_coefficient(spec, "E22", "E21", LaurentPoly::variable({"t"}, "t", 6));
  const RepSet reps = build_osp22_rep(2);
  const VerificationReport par = verify_all(spec, reps, /*parallel=*/true);
  const VerificationReport ser = verify_all(spec, reps, /*parallel=*/false);
  CHECK_FALSE(par.ok());
  CHECK_FALSE(par.failures.empty());
  check_same_report(par, ser);
}

TEST_CASE("relation verification: disabling the switch forces the serial path") {
  ParallelGuard guard;
  const AlgebraSpec spec = builtin_osp22_q();
  const RepSet reps = build_osp22_rep(3);

  parallel::enabled() = false;
  // parallel=true is now a no-op; the result must still match the
  // explicit serial call bit for bit.
  const VerificationReport forced = verify_all(spec, reps, /*parallel=*/true);
  const VerificationReport ser = verify_all(spec, reps, /*parallel=*/false);
  check_same_report(forced, ser);
  CHECK(forced.ok());
}

TEST_CASE("confluence: parallel equals serial on a confluent presentation") {
  ParallelGuard guard;
  parallel::enabled() = true;
  const RewriteSystem rs(builtin_osp22_prs());
  const ConfluenceReport par = rs.check_confluence(default_step_budget(), /*parallel=*/true);
  const ConfluenceReport ser = rs.check_confluence(default_step_budget(), /*parallel=*/false);
  CHECK(par.confluent());
  CHECK(par.overlaps_total == 88);
  check_same_confluence(par, ser);
}

TEST_CASE("confluence: parallel equals serial when overlaps fail to resolve") {
  ParallelGuard guard;
  parallel::enabled() = true;
  AlgebraSpec spec = builtin_osp22_prs();
  perturb_coefficient(spec, "E22", "E21", LaurentPoly::variable({"p", "r", "s"}, "s", 3));
  const RewriteSystem rs(spec);
  const ConfluenceReport par = rs.check_confluence(default_step_budget(), /*parallel=*/true);
  const ConfluenceReport ser = rs.check_confluence(default_step_budget(), /*parallel=*/false);
  CHECK_FALSE(par.confluent());
  CHECK_FALSE(par.failures.empty());
  check_same_confluence(par, ser);
}

TEST_CASE("confluence: disabling the switch forces the serial path") {
  ParallelGuard guard;
  const RewriteSystem rs(builtin_osp22_classical());
  parallel::enabled() = false;
  const ConfluenceReport forced = rs.check_confluence(default_step_budget(), /*parallel=*/true);
  const ConfluenceReport ser = rs.check_confluence(default_step_budget(), /*parallel=*/false);
  check_same_confluence(forced, ser);
  CHECK(forced.confluent());
}
