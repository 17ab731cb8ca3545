// Timing comparison of the serial reference kernels against their
// OpenMP-parallel counterparts. Each kernel runs both ways on identical
// inputs; results are checked for equality before any timing is reported,
// so a divergence aborts the benchmark instead of printing nonsense.
//
// Usage: qosp_bench [max_n] [repeats]
//   max_n   largest module size for the verification kernel (default 6)
//   repeats timed repetitions per configuration, best-of (default 3)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include <qosp/algebra.hpp>
#include <qosp/parallel.hpp>
#include <qosp/rep.hpp>
#include <qosp/rewrite.hpp>

using namespace qosp;
using Clock = std::chrono::steady_clock;

namespace {

double best_of_ms(int repeats, const std::function<void()>& body) {
  double best = 0.0;
  for (int i = 0; i < repeats; ++i) {
    const auto start = Clock::now();
    body();
    const std::chrono::duration<double, std::milli> elapsed = Clock::now() - start;
    if (i == 0 || elapsed.count() < best) best = elapsed.count();
  }
  return best;
}

void print_row(const std::string& label, double serial_ms, double parallel_ms) {
  const double speedup = parallel_ms > 0.0 ? serial_ms / parallel_ms : 0.0;
  std::printf("%-38s %12.2f %12.2f %9.2fx\n", label.c_str(), serial_ms, parallel_ms, speedup);
}

}  // namespace

int main(int argc, char** argv) {
  const int max_n = argc > 1 ? std::atoi(argv[1]) : 6;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  if (max_n < 1 || repeats < 1) {
    std::fprintf(stderr, "usage: qosp_bench [max_n >= 1] [repeats >= 1]\n");
    return 2;
  }

  std::printf("threads available: %d\n\n", parallel::max_threads());
  std::printf("%-38s %12s %12s %10s\n", "kernel", "serial (ms)", "parallel (ms)", "speedup");

  parallel::enabled() = true;
  const AlgebraSpec spec_q = builtin_osp22_q();

  for (int n = 2; n <= max_n; n += 2) {
    const RepSet reps = build_osp22_rep(n);
    VerificationReport serial_report, parallel_report;
    const double serial_ms =
        best_of_ms(repeats, [&] { serial_report = verify_all(spec_q, reps, false); });
    const double parallel_ms =
        best_of_ms(repeats, [&] { parallel_report = verify_all(spec_q, reps, true); });
    if (!serial_report.ok() || !parallel_report.ok() ||
        serial_report.failures.size() != parallel_report.failures.size()) {
      std::fprintf(stderr, "kernel divergence in verify_all at n=%d\n", n);
      return 1;
    }
    print_row("verify 32 relations, n=" + std::to_string(n), serial_ms, parallel_ms);
  }

  const RewriteSystem rs(builtin_osp22_prs());
  ConfluenceReport serial_conf, parallel_conf;
  const double serial_conf_ms = best_of_ms(
      repeats, [&] { serial_conf = rs.check_confluence(default_step_budget(), false); });
  const double parallel_conf_ms = best_of_ms(
      repeats, [&] { parallel_conf = rs.check_confluence(default_step_budget(), true); });
  if (serial_conf.failures.size() != parallel_conf.failures.size() ||
      serial_conf.overlaps_total != parallel_conf.overlaps_total) {
    std::fprintf(stderr, "kernel divergence in check_confluence\n");
    return 1;
  }
  print_row("confluence, 88 overlaps, 3 params", serial_conf_ms, parallel_conf_ms);

  return 0;
}
