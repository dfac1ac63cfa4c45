#pragma once

// Minimal deterministic data-parallel loop.  Work is dealt in fixed-size
// chunks so results never depend on worker count or scheduling; bodies write
// to preallocated per-index slots and must not throw.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ridgekit {

inline int thread_count() {
  static const int n = [] {
    if (const char* env = std::getenv("RIDGEKIT_THREADS")) {
      const int v = std::atoi(env);
      if (v >= 1) return std::min(v, 256);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(std::min(hc, 16u)) : 1;
  }();
  return n;
}

template <class F>
inline void parallel_for(std::size_t n, F&& body) {
  const int workers = thread_count();
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const std::size_t chunk = std::max<std::size_t>(1, (n + 255) / 256);
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      const std::size_t start = next.fetch_add(chunk);
      if (start >= n) return;
      const std::size_t end = std::min(n, start + chunk);
      for (std::size_t i = start; i < end; ++i) body(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(std::size_t(workers) - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
}

}  // namespace ridgekit
