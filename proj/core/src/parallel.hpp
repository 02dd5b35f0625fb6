#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pisot::detail {

// Splits [0, n) into chunks of `chunk` items and calls fn(chunk_index, begin, end)
// for each, on up to `threads` workers. The first exception is rethrown.
template <class Fn>
void parallel_chunks(std::int64_t n, std::int64_t chunk, int threads, Fn&& fn) {
  if (n <= 0) return;
  chunk = std::max<std::int64_t>(1, chunk);
  const std::int64_t nchunks = (n + chunk - 1) / chunk;
  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::int64_t c = next++; c < nchunks; c = next++) {
        fn(c, c * chunk, std::min(n, (c + 1) * chunk));
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = nchunks;
    }
  };
  const int count = static_cast<int>(std::clamp<std::int64_t>(threads, 1, nchunks));
  std::vector<std::thread> pool;
  for (int t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

inline std::int64_t chunk_count(std::int64_t n, std::int64_t chunk) { return (n + chunk - 1) / std::max<std::int64_t>(1, chunk); }

}  // namespace pisot::detail
