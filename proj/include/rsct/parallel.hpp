#pragma once

#include <cstdint>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rsct {

inline int hardware_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Run body(i) for i in [0, count) across `threads` workers (<= 0 picks the
/// OpenMP default; 1 or a non-OpenMP build runs the plain serial loop).
/// Each index must write only its own outputs, so results never depend on
/// the schedule. Every index runs even if one throws; the first exception
/// in index order is rethrown afterwards.
template <typename Body>
void parallel_for(std::int64_t count, int threads, Body&& body)
{
    if (count <= 0)
        return;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
#ifdef _OPENMP
    if (threads != 1) {
        const int want = threads <= 0 ? omp_get_max_threads() : threads;
#pragma omp parallel for schedule(dynamic) num_threads(want)
        for (std::int64_t i = 0; i < count; ++i) {
            try {
                body(i);
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    } else
#endif
    {
        for (std::int64_t i = 0; i < count; ++i) {
            try {
                body(i);
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace rsct
