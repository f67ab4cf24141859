#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace faber {

/// Worker count: FABER_THREADS if set and positive, else hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("FABER_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {
inline thread_local bool inside_parallel_region = false;
}

/// Runs body(i) for i in [0, count) over contiguous static chunks.
/// Each index is handled by exactly one call, so results written to
/// per-index slots do not depend on the thread count. Nested calls run
/// serially.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
  unsigned workers = detail::inside_parallel_region
                         ? 1u
                         : std::min<unsigned>(thread_count(), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t lo = w * chunk;
      std::size_t hi = std::min(count, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([lo, hi, w, &body, &errors] {
        detail::inside_parallel_region = true;
        try {
          for (std::size_t i = lo; i < hi; ++i) body(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  // lowest chunk first, so the reported error is thread-count independent
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace faber
