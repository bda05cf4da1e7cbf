#include "parab/parallel.hpp"

#include <cstdlib>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace parab {

namespace {
int g_workers = 0;
}

int worker_count() {
  if (g_workers > 0) return g_workers;
  if (const char* env = std::getenv("PARAB_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_worker_count(int n) { g_workers = n > 0 ? n : 0; }

void parallel_for(int begin, int end, const std::function<void(int)>& fn) {
  if (end <= begin) return;
#ifdef _OPENMP
  const int nw = worker_count();
  if (nw > 1) {
    std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic) num_threads(nw)
    for (int i = begin; i < end; ++i) {
      try {
        fn(i);
      } catch (...) {
#pragma omp critical
        {
          if (!err) err = std::current_exception();
        }
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#endif
  for (int i = begin; i < end; ++i) fn(i);
}

}  // namespace parab
