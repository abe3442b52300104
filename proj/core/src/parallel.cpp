#include "antlab/parallel.hpp"

#include <algorithm>

namespace antlab {

namespace {
unsigned g_threads = std::max(1u, std::thread::hardware_concurrency());
}

void set_thread_count(unsigned n) { g_threads = std::max(1u, n); }
unsigned thread_count() { return g_threads; }

namespace detail {

void run_chunked(std::size_t n_chunks, const std::function<void(std::size_t)>& chunk_fn) {
  unsigned workers = static_cast<unsigned>(std::min<std::size_t>(g_threads, n_chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) chunk_fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      chunk_fn(c);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned t = 0; t + 1 < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace detail
}  // namespace antlab
