#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace fourp {

// Process-wide default worker count: the FOURP_THREADS environment variable
// if set, hardware concurrency otherwise.  The CLI --threads flag overrides
// it via set_default_thread_count.
int default_thread_count();
void set_default_thread_count(int threads);

namespace detail {

// Runs fn(i) for every i in [0, n) on `threads` workers pulling chunks off
// a shared counter.  Dynamic scheduling is safe here because every caller
// either reduces with an order-independent operation (exact integer sums)
// or writes to a per-index slot; results are identical for any thread
// count.
template <typename Fn>
void parallel_for(std::size_t n, int threads, std::size_t chunk, Fn&& fn) {
  if (threads <= 0) threads = default_thread_count();
  if (threads <= 1 || n <= chunk) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t begin = next.fetch_add(chunk);
      if (begin >= n) return;
      const std::size_t end = std::min(begin + chunk, n);
      for (std::size_t i = begin; i < end; ++i) fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace detail

// Sum of fn(i) over i in [0, n), computed on `threads` workers.  The terms
// are 64-bit integers, so the reduction is exact and order-independent.
template <typename Fn>
std::uint64_t parallel_sum(std::size_t n, int threads, Fn&& fn) {
  std::atomic<std::uint64_t> total{0};
  detail::parallel_for(n, threads, 16, [&](std::size_t i) {
    total.fetch_add(fn(i), std::memory_order_relaxed);
  });
  return total.load();
}

// Fills out[i] = fn(i) for i in [0, n); out must have size n.
template <typename T, typename Fn>
void parallel_fill(std::vector<T>& out, int threads, Fn&& fn) {
  detail::parallel_for(out.size(), threads, 8,
                       [&](std::size_t i) { out[i] = fn(i); });
}

}  // namespace fourp
