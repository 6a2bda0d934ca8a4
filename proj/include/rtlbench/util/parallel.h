#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace rtlbench::util {

// Runs fn(i) for i in [0, n) on up to `workers` threads. Work items must be
// independent; per-index output slots keep results deterministic.
template <typename Fn>
void ParallelFor(size_t n, unsigned workers, Fn&& fn) {
  if (n == 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  if (workers == 0) workers = hw ? hw : 1;
  workers = static_cast<unsigned>(std::min<size_t>(workers, n));
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace rtlbench::util
