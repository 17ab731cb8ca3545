#pragma once

namespace qosp::parallel {

// Global switch for the OpenMP-parallel kernels. When false (or when the
// library was built without OpenMP) every kernel runs its serial path.
// Results are identical either way; the switch exists so the serial
// reference implementation stays exercised by tests and benchmarks.
bool& enabled();

// Number of worker threads the parallel kernels may use.
int max_threads();

}  // namespace qosp::parallel
