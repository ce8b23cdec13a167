#pragma once

#include <cstdint>
#include <vector>

namespace surfsim {

// Self-contained splitmix64 generator. Standard-library distributions are not
// bit-reproducible across implementations, so every draw the simulator makes
// goes through this class; the exact algorithms below are part of the
// reproducibility contract (see README, "Reproducibility").
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // Uniform in [0,1), 53-bit mantissa.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0,n). Multiply-high reduction; bias is < n / 2^64.
  std::uint32_t next_below(std::uint32_t n) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  bool bernoulli(double p) { return next_double() < p; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Stafford mix13 finalizer (the splitmix64 output function).
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Derives an independent child seed (campaign -> cell -> run streams).
  static std::uint64_t split(std::uint64_t seed, std::uint64_t index) {
    return mix(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
  }

 private:
  std::uint64_t state_;
};

// k distinct values from {0,...,n-1}, sorted ascending. Partial Fisher-Yates.
std::vector<int> sample_distinct(Rng& rng, int k, int n);

}  // namespace surfsim
