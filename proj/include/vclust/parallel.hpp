#ifndef VCLUST_PARALLEL_HPP
#define VCLUST_PARALLEL_HPP

#include <cstddef>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vclust {

/// Execution policy for the data-parallel kernels (experiment grid, epsilon
/// sweep).  serial is the reference path; openmp falls back to serial when
/// compiled without OpenMP.  Both produce identical results: every kernel
/// writes to a distinct pre-sized slot.
enum class Exec { serial, openmp };

template <class F>
void parallel_for(std::size_t n, Exec exec, F&& body) {
#ifdef _OPENMP
    if (exec == Exec::openmp) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            body(static_cast<std::size_t>(i));
        }
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i) {
        body(i);
    }
}

}  // namespace vclust

#endif
