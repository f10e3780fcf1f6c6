#pragma once

#include <cstddef>
#include <exception>
#include <limits>

namespace sqeeg {

/// Selects between the OpenMP kernel and its serial reference loop. Both paths
/// evaluate the same per-item function, so results agree bit for bit.
enum class Execution { Serial, Parallel };

template <typename Fn>
void parallel_for(std::size_t n, Execution exec, Fn&& fn) {
  if (exec == Execution::Serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::size_t failed_at = std::numeric_limits<std::size_t>::max();
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(sqeeg_parallel_for_failure)
      {
        // keep the lowest failing index so the rethrown error is reproducible
        if (static_cast<std::size_t>(i) < failed_at) {
          failed_at = static_cast<std::size_t>(i);
          failure = std::current_exception();
        }
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace sqeeg
