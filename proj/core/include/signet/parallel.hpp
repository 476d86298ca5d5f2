#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace signet {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Runs fn(begin, end) over disjoint ranges covering [0, n). Ranges are
/// assigned statically, so any per-range outputs are identical for every
/// thread count.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  threads = resolve_threads(threads);
  if (n == 0) return;
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  if (workers <= 1) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

/// Fixed-size-block reduction: fn fills the partial result for each block
/// [block*block_size, min(n, ...)) into its own slot; the caller combines the
/// slots in block order. The block decomposition is independent of the thread
/// count, so floating-point reductions are bit-reproducible.
template <typename Partial, typename Fn>
std::vector<Partial> blocked_map(std::size_t n, std::size_t block_size, int threads, Fn&& fn) {
  std::size_t blocks = n == 0 ? 0 : (n + block_size - 1) / block_size;
  std::vector<Partial> partials(blocks);
  parallel_for(blocks, threads, [&](std::size_t b0, std::size_t b1) {
    for (std::size_t b = b0; b < b1; ++b) {
      std::size_t begin = b * block_size;
      std::size_t end = std::min(n, begin + block_size);
      fn(b, begin, end, partials[b]);
    }
  });
  return partials;
}

}  // namespace signet
