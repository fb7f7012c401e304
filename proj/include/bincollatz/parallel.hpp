#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bincollatz::detail {

inline std::size_t resolve_workers(std::size_t requested) {
  if (requested != 0) return requested;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Runs body(worker, index) for every index in [begin, end), handing out
/// chunks from a shared counter. The first exception thrown by any worker is
/// rethrown on the caller's thread.
template <typename Body>
void parallel_for(std::size_t begin, std::size_t end, std::size_t workers, Body&& body,
                  std::size_t chunk = 256) {
  if (begin >= end) return;
  workers = std::min(resolve_workers(workers), (end - begin + chunk - 1) / chunk);
  if (workers <= 1) {
    for (std::size_t i = begin; i < end; ++i) body(std::size_t{0}, i);
    return;
  }
  std::atomic<std::size_t> next{begin};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (;;) {
          const auto lo = next.fetch_add(chunk);
          if (lo >= end) break;
          const auto hi = std::min(end, lo + chunk);
          for (std::size_t i = lo; i < hi; ++i) body(w, i);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(end);
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace bincollatz::detail
