#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "curvlab/errors.hpp"

namespace curvlab {

// Dense row-major matrix of doubles.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * std::size_t(c), 0.0) {}

  double* row(int i) { return a.data() + std::size_t(i) * cols; }
  const double* row(int i) const { return a.data() + std::size_t(i) * cols; }
  double& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
  double at(int i, int j) const { return a[std::size_t(i) * cols + j]; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  Matrix transposed() const {
    Matrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  double frobenius() const {
    double s = 0.0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
  }
};

// Dense symmetric matrix, full row-major storage.
// Invariants (checked by validate): finite entries, symmetric to
// |a_ij - a_ji| <= 1e-10 * max(1, |a_ij|).
struct SymMatrix {
  int dim = 0;
  std::vector<double> a;

  SymMatrix() = default;
  explicit SymMatrix(int d) : dim(d), a(std::size_t(d) * std::size_t(d), 0.0) {}

  double* row(int i) { return a.data() + std::size_t(i) * dim; }
  const double* row(int i) const { return a.data() + std::size_t(i) * dim; }
  double& at(int i, int j) { return a[std::size_t(i) * dim + j]; }
  double at(int i, int j) const { return a[std::size_t(i) * dim + j]; }

  static SymMatrix identity(int n) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  static SymMatrix diag(const std::vector<double>& d) {
    SymMatrix m(int(d.size()));
    for (int i = 0; i < m.dim; ++i) m.at(i, i) = d[std::size_t(i)];
    return m;
  }

  double frobenius() const {
    double s = 0.0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
  }

  void validate(const char* what = "SymMatrix") const;
};

// Eigendecomposition M = Q diag(values) Q^T.
// values sorted non-increasing (ties keep original index order);
// vectors.at(i, k) is component i of eigenvector k; the sign of each vector
// is fixed by making its largest-magnitude component positive.
struct EigenDecomp {
  std::vector<double> values;
  Matrix vectors;

  int dim() const { return vectors.rows; }
};

}  // namespace curvlab
