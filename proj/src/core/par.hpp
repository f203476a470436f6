// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace slt {

// Worker count: SHEARLET_THREADS env var, else hardware concurrency (capped).
inline int worker_count() {
  if (const char* env = std::getenv("SHEARLET_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

namespace detail {
inline thread_local bool g_in_parallel = false;
}

// Runs fn(i) for i in [0, count). Work items own disjoint output slots, so
// results are independent of the scheduling. Nested calls run serially.
template <typename Fn>
void parallel_for(size_t count, Fn&& fn) {
  const int workers = std::min<size_t>(worker_count(), count);
  if (workers <= 1 || detail::g_in_parallel) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      detail::g_in_parallel = true;
      while (true) {
        const size_t i = next.fetch_add(1);
        if (i >= count) break;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace slt
