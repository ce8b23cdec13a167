#include "surfsim/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace surfsim {

std::vector<int> sample_distinct(Rng& rng, int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("sample_distinct: k out of range");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace surfsim
