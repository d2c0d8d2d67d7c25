#pragma once
// Counter-based pseudo-random generator.
//
// Every random decision in the project derives from this one documented
// scheme so that runs are reproducible from a manifest across platforms:
//
//   mix64(z)        = SplitMix64 finalizer
//                     (z ^= z>>30; z *= 0xBF58476D1CE4E5B9;
//                      z ^= z>>27; z *= 0x94D049BB133111EB; z ^= z>>31)
//   key(seed)       = mix64(seed + GOLDEN)
//   derive(key, t)  = mix64(key ^ mix64(t + GOLDEN))     (stream splitting)
//   draw_i(key)     = mix64(key + (i+1) * GOLDEN)        (i-th 64-bit value)
//
// with GOLDEN = 0x9E3779B97F4A7C15. Draws are pure functions of (key, i):
// no hidden state beyond the counter.

#include <cstdint>
#include <vector>

namespace curvlab::rng {

inline constexpr std::uint64_t GOLDEN = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

inline std::uint64_t key_from_seed(std::uint64_t seed) { return mix64(seed + GOLDEN); }

inline std::uint64_t derive(std::uint64_t key, std::uint64_t tag) {
  return mix64(key ^ mix64(tag + GOLDEN));
}

class Counter {
 public:
  explicit Counter(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() { return mix64(key_ + (++i_) * GOLDEN); }

  // uniform in [0, 1): top 53 bits
  double next_u01() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in (0, 1], used by Box-Muller to avoid log(0)
  double next_u01_open0() { return double((next_u64() >> 11) + 1) * 0x1.0p-53; }

  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_u01(); }

  // standard normal via Box-Muller (both values consumed, one returned)
  double next_normal();

  // unbiased-enough bounded draw (128-bit multiply map), n > 0
  std::uint64_t next_below(std::uint64_t n) {
    return std::uint64_t((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Fisher-Yates
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = std::size_t(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t i_ = 0;
};

// k distinct values from {0..n-1}, returned sorted ascending.
std::vector<int> sample_without_replacement(int n, int k, Counter& rng);

}  // namespace curvlab::rng
