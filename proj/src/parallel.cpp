#include "coldrec/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace coldrec {

namespace {

std::atomic<int> g_max_threads{0};

int env_threads() {
  const char* env = std::getenv("COLDREC_THREADS");
  if (env) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

}  // namespace

void set_max_threads(int n) {
  g_max_threads.store(n >= 1 ? n : 1, std::memory_order_relaxed);
}

int max_threads() {
  int v = g_max_threads.load(std::memory_order_relaxed);
  if (v == 0) {
    v = env_threads();
    g_max_threads.store(v, std::memory_order_relaxed);
  }
  return v;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = static_cast<std::size_t>(max_threads());
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  const std::size_t chunk = std::max<std::size_t>(1, n / (workers * 8));
  auto body = [&] {
    for (;;) {
      std::size_t begin = next.fetch_add(chunk, std::memory_order_relaxed);
      if (begin >= n) return;
      std::size_t end = std::min(n, begin + chunk);
      for (std::size_t i = begin; i < end; ++i) fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
}

}  // namespace coldrec
