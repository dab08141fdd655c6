#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tgospa {

/// Runs fn(i) for i in [0, n). threads == 0 uses the OpenMP default pool,
/// threads == 1 forces the serial reference path, threads > 1 pins the team
/// size. Each index writes only its own outputs, so serial and parallel
/// runs produce bit-identical results.
template <class F>
void parallel_for(std::size_t n, int threads, F&& fn) {
#ifdef _OPENMP
  if (threads != 1 && n > 1) {
    if (threads > 0) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
      for (long long i = 0; i < static_cast<long long>(n); ++i) {
        fn(static_cast<std::size_t>(i));
      }
    } else {
#pragma omp parallel for schedule(dynamic)
      for (long long i = 0; i < static_cast<long long>(n); ++i) {
        fn(static_cast<std::size_t>(i));
      }
    }
    return;
  }
#else
  (void)threads;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace tgospa
