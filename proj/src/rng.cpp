#include "curvlab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace curvlab::rng {

double Counter::next_normal() {
  double u1 = next_u01_open0();
  double u2 = next_u01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<int> sample_without_replacement(int n, int k, Counter& rng) {
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  // partial Fisher-Yates: draw k without replacement
  for (int i = 0; i < k; ++i) {
    int j = i + int(rng.next_below(std::uint64_t(n - i)));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(std::size_t(k));
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace curvlab::rng
