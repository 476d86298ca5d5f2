#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace signet {

/// Uniform integer in [0, bound) by rejection, independent of the standard
/// library's distribution implementations so seeded results are identical
/// across platforms.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) return 0;
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

/// k distinct values from [0, n), uniform without replacement, via a partial
/// Fisher-Yates shuffle. Output order is the draw order.
inline std::vector<std::uint64_t> sample_without_replacement(std::mt19937_64& rng,
                                                             std::uint64_t n, std::uint64_t k) {
  std::vector<std::uint64_t> pool(n);
  for (std::uint64_t i = 0; i < n; ++i) pool[i] = i;
  std::vector<std::uint64_t> picked;
  picked.reserve(k);
  for (std::uint64_t i = 0; i < k && i < n; ++i) {
    std::uint64_t j = i + uniform_below(rng, n - i);
    std::swap(pool[i], pool[j]);
    picked.push_back(pool[i]);
  }
  return picked;
}

}  // namespace signet
