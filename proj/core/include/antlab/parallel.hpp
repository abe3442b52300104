#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace antlab {

// Global worker count used by all parallel loops.  Work is split into chunks
// whose layout depends only on the problem size, and chunk results are
// combined in chunk order, so results are bitwise identical for any degree.
void set_thread_count(unsigned n);
unsigned thread_count();

namespace detail {
void run_chunked(std::size_t n_chunks, const std::function<void(std::size_t)>& chunk_fn);
}

// Applies body(i) for i in [0, n) with a fixed chunking of size `grain`.
// `body` must only write to state owned by item i (or chunk-local state).
template <typename Body>
void parallel_for(std::size_t n, std::size_t grain, Body&& body) {
  if (n == 0) return;
  if (grain == 0) grain = 1;
  std::size_t n_chunks = (n + grain - 1) / grain;
  detail::run_chunked(n_chunks, [&](std::size_t c) {
    std::size_t lo = c * grain;
    std::size_t hi = std::min(n, lo + grain);
    for (std::size_t i = lo; i < hi; ++i) body(i);
  });
}

// Deterministic map/reduce: chunk partial results are produced concurrently
// and folded strictly in chunk order.
template <typename T, typename Map, typename Fold>
T parallel_reduce(std::size_t n, std::size_t grain, T init, Map&& map_chunk, Fold&& fold) {
  if (n == 0) return init;
  if (grain == 0) grain = 1;
  std::size_t n_chunks = (n + grain - 1) / grain;
  std::vector<T> partial(n_chunks, init);
  detail::run_chunked(n_chunks, [&](std::size_t c) {
    std::size_t lo = c * grain;
    std::size_t hi = std::min(n, lo + grain);
    T acc = init;
    for (std::size_t i = lo; i < hi; ++i) acc = map_chunk(i, acc);
    partial[c] = acc;
  });
  T out = init;
  for (std::size_t c = 0; c < n_chunks; ++c) out = fold(out, partial[c]);
  return out;
}

}  // namespace antlab
