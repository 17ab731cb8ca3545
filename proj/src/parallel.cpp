#include "qosp/parallel.hpp"

#if defined(QOSP_HAVE_OPENMP)
#include <omp.h>
#endif

namespace qosp::parallel {

bool& enabled() {
#if defined(QOSP_HAVE_OPENMP)
  static bool flag = true;
#else
  static bool flag = false;
#endif
  return flag;
}

int max_threads() {
#if defined(QOSP_HAVE_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qosp::parallel
