#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace mfsa {

// Worker cap: OCCLUSION_ATTN_THREADS env var, overridable in-process for tests.
inline int& thread_cap_override() {
  static int cap = 0;  // 0 = not set
  return cap;
}

inline void set_thread_cap(int n) { thread_cap_override() = n; }

inline int max_threads() {
  if (thread_cap_override() > 0) return thread_cap_override();
  if (const char* env = std::getenv("OCCLUSION_ATTN_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Runs fn over contiguous chunks of [0, n). Each index is processed exactly
// once by exactly one thread, so any per-element computation with a fixed
// internal reduction order is bitwise independent of the thread count.
inline void parallel_for(int64_t n, const std::function<void(int64_t, int64_t)>& fn) {
  if (n <= 0) return;
  int nt = std::min<int64_t>(max_threads(), n);
  if (nt <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<size_t>(nt - 1));
  int64_t chunk = (n + nt - 1) / nt;
  for (int t = 1; t < nt; ++t) {
    int64_t lo = t * chunk;
    int64_t hi = std::min<int64_t>(n, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back(fn, lo, hi);
  }
  fn(0, std::min<int64_t>(n, chunk));
  for (auto& w : workers) w.join();
}

}  // namespace mfsa
