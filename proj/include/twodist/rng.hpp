#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace twodist {

using Rng = std::mt19937_64;

// Unbiased draw from [0, n). std::uniform_int_distribution is not portable
// across standard libraries; results here must be reproducible from seeds.
inline std::uint64_t rnd_below(Rng& rng, std::uint64_t n) {
  if (n == 0) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

inline int rnd_int(Rng& rng, int lo, int hi) {  // inclusive range
  return lo + static_cast<int>(rnd_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

template <typename T>
void shuffle_vec(Rng& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = rnd_below(rng, i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace twodist
