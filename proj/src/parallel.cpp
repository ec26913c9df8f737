#include "ledyn/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace ledyn {

namespace {
std::atomic<unsigned> g_workers{0};
}

void set_default_workers(unsigned workers) { g_workers.store(workers); }

unsigned default_workers() {
  unsigned w = g_workers.load();
  if (w == 0)
    w = std::thread::hardware_concurrency();
  return w == 0 ? 1 : w;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  unsigned workers) {
  if (workers == 0)
    workers = default_workers();
  if (workers > n)
    workers = n > 0 ? (unsigned)n : 1;
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n)
          return;
        fn(i);
      }
    });
  for (auto& th : pool)
    th.join();
}

} // namespace ledyn
