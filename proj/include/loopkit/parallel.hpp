#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace loopkit {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

template <class T>
struct Hit {
  int64_t ordinal;
  T value;
};

/// Scans ordinals [0, total) with f: int64_t -> std::optional<T> and returns
/// the hit with the smallest ordinal. Workers own disjoint contiguous blocks,
/// so the result is deterministic regardless of scheduling.
template <class T, class F>
std::optional<Hit<T>> parallel_first(int64_t total, int threads, F&& f) {
  threads = resolve_threads(threads);
  if (total <= 0) return std::nullopt;
  if (threads <= 1 || total < 4 * threads) {
    for (int64_t i = 0; i < total; ++i)
      if (auto r = f(i)) return Hit<T>{i, std::move(*r)};
    return std::nullopt;
  }

  std::atomic<int64_t> best{total};
  std::vector<std::optional<Hit<T>>> found(static_cast<size_t>(threads));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  const int64_t chunk = (total + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      const int64_t lo = t * chunk;
      const int64_t hi = std::min<int64_t>(total, lo + chunk);
      for (int64_t i = lo; i < hi; ++i) {
        if (best.load(std::memory_order_relaxed) < i) return;
        if (auto r = f(i)) {
          found[static_cast<size_t>(t)] = Hit<T>{i, std::move(*r)};
          int64_t cur = best.load(std::memory_order_relaxed);
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;  // first hit in this block is the block's minimum
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  std::optional<Hit<T>> result;
  for (auto& h : found)
    if (h && (!result || h->ordinal < result->ordinal)) result = std::move(h);
  return result;
}

}  // namespace loopkit
