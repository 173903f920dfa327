#pragma once

#include "milnum/mixed.hpp"

#include <cstddef>
#include <exception>
#include <vector>

namespace milnum::detail {

/// Runs fn(0..count-1). Under Execution::parallel the iterations are spread
/// over OpenMP threads; each writes only its own output slot. The exception of
/// the lowest failing index is rethrown so failures are schedule-independent.
template <class Fn>
void for_each_index(std::size_t count, Execution execution, Fn&& fn)
{
#ifdef _OPENMP
    if (execution == Execution::parallel && count > 1) {
        std::vector<std::exception_ptr> errors(count);
        const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) {
            try {
                fn(static_cast<std::size_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        return;
    }
#else
    (void)execution;
#endif
    for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace milnum::detail
