#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ifcdmt {

/// Worker cap from the environment (IFC_DMT_THREADS), 0 if unset/invalid.
[[nodiscard]] inline int env_thread_cap() {
  const char* s = std::getenv("IFC_DMT_THREADS");
  if (s == nullptr) return 0;
  const int n = std::atoi(s);
  return n > 0 ? n : 0;
}

/// Number of workers to use: `requested` if positive, otherwise the hardware
/// count, in both cases capped by IFC_DMT_THREADS.
[[nodiscard]] inline int worker_count(int requested = 0) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  const int cap = env_thread_cap();
  if (cap > 0) n = std::min(n, cap);
  return n;
}

/// Run fn(i) for i in [0, n) on `workers` threads, static block partition.
/// Results must be written to per-index slots; the partition carries no
/// ordering guarantees beyond that.
template <typename Fn>
void parallel_for_index(std::int64_t n, int workers, Fn&& fn) {
  if (n <= 0) return;
  workers = static_cast<int>(std::min<std::int64_t>(std::max(workers, 1), n));
  if (workers == 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::int64_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t lo = w * chunk;
    const std::int64_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] {
      for (std::int64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace ifcdmt
