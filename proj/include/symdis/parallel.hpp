#pragma once
// Execution-mode switch shared by the heavy kernels (cube enumeration and
// simplex row updates). Each kernel keeps a serial reference implementation;
// the parallel variant must produce bit-identical results, which exact
// rational arithmetic makes checkable.
#ifdef _OPENMP
#include <omp.h>
#endif

namespace symdis {

enum class ExecMode { Auto, Serial, Parallel };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Resolves Auto: parallel only when the work size clears a threshold and
/// more than one thread is available. Explicit Parallel always takes the
/// OpenMP path so tests can exercise it regardless of core count.
inline bool use_parallel(ExecMode mode, long long work_size,
                         long long threshold = 1 << 14) {
  switch (mode) {
    case ExecMode::Serial:
      return false;
    case ExecMode::Parallel:
      return true;
    case ExecMode::Auto:
    default:
      return max_threads() > 1 && work_size >= threshold;
  }
}

}  // namespace symdis
