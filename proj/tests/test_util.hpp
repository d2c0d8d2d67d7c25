#pragma once
// Shared helpers for the test suites.

#include <cmath>
#include <vector>

#include "curvlab/matrix.hpp"
#include "curvlab/rng.hpp"

namespace curvlab::testutil {

inline SymMatrix random_sym(int n, std::uint64_t seed, double scale = 1.0) {
  rng::Counter r(rng::key_from_seed(seed));
  SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double v = scale * r.next_uniform(-1.0, 1.0);
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  return m;
}

inline double frob_dist(const SymMatrix& a, const SymMatrix& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.a.size(); ++i) {
    double d = a.a[i] - b.a[i];
    s += d * d;
  }
  return std::sqrt(s);
}

inline double frob_dist(const Matrix& a, const Matrix& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.a.size(); ++i) {
    double d = a.a[i] - b.a[i];
    s += d * d;
  }
  return std::sqrt(s);
}

// Q diag(values) Q^T
inline SymMatrix reconstruct(const EigenDecomp& ed) {
  const int n = ed.dim();
  SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        s += ed.vectors.at(i, k) * ed.values[std::size_t(k)] * ed.vectors.at(j, k);
      m.at(i, j) = s;
    }
  return m;
}

}  // namespace curvlab::testutil
