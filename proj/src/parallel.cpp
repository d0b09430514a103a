// SPDX-License-Identifier: Apache-2.0
#include "aprank/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace aprank {

namespace {
std::atomic<int> g_threads{0}; // 0 = hardware
} // namespace

void set_thread_count(int threads) { g_threads.store(threads < 0 ? 0 : threads); }

int thread_count() {
  int t = g_threads.load();
  if (t > 0) return t;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::int64_t chunk_count(std::int64_t total, std::int64_t chunk) {
  if (total <= 0) return 0;
  return (total + chunk - 1) / chunk;
}

void parallel_chunks(std::int64_t total,
                     const std::function<void(std::int64_t, std::int64_t, std::int64_t)>& f,
                     std::int64_t chunk) {
  const std::int64_t nchunks = chunk_count(total, chunk);
  if (nchunks == 0) return;
  const int workers = static_cast<int>(std::min<std::int64_t>(thread_count(), nchunks));
  auto run = [&](std::int64_t c) {
    std::int64_t begin = c * chunk;
    std::int64_t end = std::min(total, begin + chunk);
    f(c, begin, end);
  };
  if (workers <= 1) {
    for (std::int64_t c = 0; c < nchunks; ++c) run(c);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::int64_t c = next.fetch_add(1);
        if (c >= nchunks) return;
        run(c);
      }
    });
  }
  for (auto& t : pool) t.join();
}

} // namespace aprank
