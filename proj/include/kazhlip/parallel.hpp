#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#include <omp.h>

namespace kazhlip {

// Every data-parallel kernel takes one of these. `serial` is the
// reference path the tests compare the OpenMP path against.
enum class Execution { serial, parallel };

// Runs body(i) for i in [0, count). Results must be written to
// per-index slots; the first exception thrown by any iteration is
// rethrown after the loop.
template <typename Body>
void for_each_index(std::size_t count, Execution exec, Body&& body) {
  if (exec == Execution::serial || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace kazhlip
