#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace urep {

/// Runs f(0..n-1), over OpenMP threads when parallel is set and OpenMP is
/// compiled in, serially otherwise. Callers write to disjoint slots, so both
/// paths produce identical results.
template <class F>
void parallel_for(size_t n, bool parallel, F&& f) {
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i) f(static_cast<size_t>(i));
        return;
    }
#else
    (void)parallel;
#endif
    for (size_t i = 0; i < n; ++i) f(i);
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace urep
