#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "rctour/error.hpp"

namespace rctour::internal {

inline int resolve_threads(int requested) {
  if (requested < 0) throw_invalid("thread count must be >= 0");
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

/// Runs fn(i) for every i in [0, count) across `threads` workers. Callers
/// keep determinism by writing results into index-addressed slots and
/// reducing in index order afterwards.
template <typename Fn>
void parallel_for_indexed(std::uint64_t count, int threads, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::uint64_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  int n = threads;
  if (static_cast<std::uint64_t>(n) > count)
    n = static_cast<int>(count);
  pool.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace rctour::internal
