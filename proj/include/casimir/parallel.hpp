#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace casimir {

/// How a data-parallel kernel runs. Automatic follows the process-wide switch
/// (the CLI's --no-parallel turns it off); Serial is the reference path.
enum class Exec { Automatic, Serial, Parallel };

bool parallel_enabled();
void set_parallel(bool enabled);

inline bool use_parallel(Exec exec) {
    return exec == Exec::Parallel || (exec == Exec::Automatic && parallel_enabled());
}

/// Runs body(i) for i in [0, n). Exceptions raised by any iteration are
/// rethrown on the calling thread (the first one observed wins).
template <class F>
void parallel_for(std::size_t n, F&& body, Exec exec = Exec::Automatic, std::size_t min_parallel = 16) {
    if (!use_parallel(exec) || n < min_parallel) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr error;
    std::mutex mu;
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace casimir
