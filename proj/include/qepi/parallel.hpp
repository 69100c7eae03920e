#pragma once

#include <cstdint>
#include <exception>

namespace qepi {

enum class Execution { Serial, Parallel };

/// Runs body(i) for i in [0, n). The parallel path uses an OpenMP loop; the
/// first exception thrown by any iteration is rethrown after the loop.
template <class Body>
void for_each_index(std::int64_t n, Execution exec, Body&& body) {
  if (exec == Execution::Serial) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(qepi_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace qepi
