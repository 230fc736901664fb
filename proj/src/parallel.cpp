#include "fourp/parallel.hpp"

#include <cstdlib>

namespace fourp {

namespace {

int initial_thread_count() {
  if (const char* env = std::getenv("FOURP_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::atomic<int> g_threads{0};

}  // namespace

int default_thread_count() {
  int v = g_threads.load(std::memory_order_relaxed);
  if (v == 0) {
    v = initial_thread_count();
    g_threads.store(v, std::memory_order_relaxed);
  }
  return v;
}

void set_default_thread_count(int threads) {
  g_threads.store(threads >= 1 ? threads : 1, std::memory_order_relaxed);
}

}  // namespace fourp
