#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace gromov {

// 0 means "use hardware concurrency".
inline int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(begin, end) over [0, total) split into contiguous chunks, one per
// worker. Chunk boundaries depend only on (total, threads), so any
// order-insensitive accumulation stays deterministic.
template <typename Fn>
void parallel_chunks(std::int64_t total, int threads, Fn&& fn) {
  threads = resolve_thread_count(threads);
  if (total <= 0) return;
  if (threads <= 1 || total == 1) {
    fn(static_cast<std::int64_t>(0), total);
    return;
  }
  if (static_cast<std::int64_t>(threads) > total) threads = static_cast<int>(total);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  const std::int64_t base = total / threads;
  const std::int64_t extra = total % threads;
  std::int64_t begin = 0;
  for (int w = 0; w < threads; ++w) {
    const std::int64_t len = base + (w < extra ? 1 : 0);
    const std::int64_t end = begin + len;
    workers.emplace_back([&fn, begin, end] { fn(begin, end); });
    begin = end;
  }
  for (auto& t : workers) t.join();
}

}  // namespace gromov
