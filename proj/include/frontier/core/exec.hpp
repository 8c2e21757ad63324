// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frontier {

/// Execution policy for the data-parallel kernels. `serial` runs the exact
/// same loop bodies on one thread and is what the tests compare against.
enum class Exec { serial, parallel };

inline int max_threads(Exec exec) {
#ifdef _OPENMP
    return exec == Exec::parallel ? omp_get_max_threads() : 1;
#else
    (void)exec;
    return 1;
#endif
}

inline int thread_id() {
#ifdef _OPENMP
    return omp_get_thread_num();
#else
    return 0;
#endif
}

/// Runs `body(i)` for i in [0, n). Iterations must touch disjoint state.
template <class Body>
void parallel_for(Exec exec, std::int64_t n, Body&& body) {
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic, 16) if (par)
    for (std::int64_t i = 0; i < n; ++i) {
        body(i);
    }
}

}  // namespace frontier
