#ifndef PCPFORGE_PARALLEL_HPP
#define PCPFORGE_PARALLEL_HPP

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace pcpforge {

// Worker count: PCP_FORGE_THREADS if set, hardware concurrency otherwise.
// Affects speed only; callers must write to disjoint pre-allocated slots.
inline unsigned worker_count() {
  if (const char* env = std::getenv("PCP_FORGE_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return (unsigned)n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

template <typename F>
void parallel_for(size_t n, F&& fn) {
  unsigned workers = worker_count();
  if (workers <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (unsigned w = 0; w < workers && w < n; ++w)
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace pcpforge

#endif
