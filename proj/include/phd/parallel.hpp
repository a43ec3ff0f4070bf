#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <type_traits>
#include <vector>

namespace phd::parallel {

/// Thread cap from PHD_THREADS; 0, unset, or unparsable means auto
/// (hardware concurrency).
inline int thread_cap() {
  const char* env = std::getenv("PHD_THREADS");
  if (env != nullptr) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// fn(0..count-1) evaluated into an index-ordered vector. Work is handed
/// out by an atomic counter but each result lands in its own slot, so the
/// output is identical for any thread count.
template <typename F>
auto map(int count, F&& fn) {
  using R = std::decay_t<std::invoke_result_t<F, int>>;
  std::vector<R> out(static_cast<std::size_t>(count < 0 ? 0 : count));
  const int threads = std::min(thread_cap(), count);
  if (threads <= 1) {
    for (int idx = 0; idx < count; ++idx) out[idx] = fn(idx);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (int idx = next.fetch_add(1); idx < count; idx = next.fetch_add(1))
        out[idx] = fn(idx);
    });
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace phd::parallel
