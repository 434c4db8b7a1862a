// parallel.hpp -- OpenMP execution policy for the search and enumeration
// kernels; every kernel keeps a serial path that produces identical results
#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mealy {

enum class exec { serial, parallel };

namespace par {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

/// Runs f(i) for i in [0, n). The parallel mode imposes no ordering, so f
/// must only write to its own slot of a preallocated result buffer.
template <class F>
void for_each_index(exec mode, std::size_t n, F&& f) {
#ifdef _OPENMP
  if (mode == exec::parallel && n > 1) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
      f(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace par
}  // namespace mealy
