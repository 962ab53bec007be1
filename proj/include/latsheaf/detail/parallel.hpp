#ifndef LATSHEAF_DETAIL_PARALLEL_HPP
#define LATSHEAF_DETAIL_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace latsheaf {
namespace detail {

inline int thread_budget() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("LATSHEAF_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v < 1024) n = std::min(n, static_cast<int>(v));
  }
  return n;
}

// Runs fn(i) for i in [0, count). fn must only touch state owned by index i;
// results are then independent of scheduling, so output stays deterministic.
template <typename Fn>
void parallel_for(int count, Fn fn) {
  int workers = std::min(thread_budget(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&]() {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  for (auto& t : pool) t.join();
}

}  // namespace detail
}  // namespace latsheaf

#endif  // LATSHEAF_DETAIL_PARALLEL_HPP
