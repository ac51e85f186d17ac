#ifndef RLVR_PARALLEL_HPP_
#define RLVR_PARALLEL_HPP_

#include <cstddef>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rlvr {

// Worker count for data-parallel loops. RLVR_WORKERS overrides; it may only
// change speed, never results: every parallel loop in this project writes to
// disjoint slots and all reductions happen in a fixed serial order afterward.
inline int worker_count() {
  if (const char* env = std::getenv("RLVR_WORKERS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Runs fn(i) for i in [0, n). Iterations must be independent.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
#ifdef _OPENMP
  const int workers = worker_count();
  if (workers > 1 && n > 1) {
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      fn(static_cast<std::size_t>(i));
    }
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace rlvr

#endif  // RLVR_PARALLEL_HPP_
