#include "drckit/kernels.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace drckit {

static int read_worker_cap() {
  if (const char* env = std::getenv("DRC_KIT_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (...) {
      // fall through to the default
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

int worker_cap() {
  static const int cap = read_worker_cap();
  return cap;
}

}  // namespace drckit
