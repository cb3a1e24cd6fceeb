#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace odcode {

inline std::size_t default_workers() {
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

// Calls f(i) for every i < count on a small pool of threads. Indices are
// handed out in increasing order; callers store results by index so the
// outcome does not depend on scheduling. The first exception is rethrown.
template <class F>
void parallel_for(std::size_t count, F&& f, std::size_t workers = default_workers()) {
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace odcode
