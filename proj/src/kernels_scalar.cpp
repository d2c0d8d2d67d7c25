// Reference kernels. These define the FP semantics; keep them boring.

#include "curvlab/kernels.hpp"

#include <cmath>

namespace curvlab::kern {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double l0 = 0.0, l1 = 0.0, l2 = 0.0, l3 = 0.0;
  std::size_t body = n & ~std::size_t(3);
  for (std::size_t i = 0; i < body; i += 4) {
    l0 = std::fma(x[i + 0], y[i + 0], l0);
    l1 = std::fma(x[i + 1], y[i + 1], l1);
    l2 = std::fma(x[i + 2], y[i + 2], l2);
    l3 = std::fma(x[i + 3], y[i + 3], l3);
  }
  double s = (l0 + l1) + (l2 + l3);
  for (std::size_t i = body; i < n; ++i) s = std::fma(x[i], y[i], s);
  return s;
}

double nrm2sq_scalar(const double* x, std::size_t n) { return dot_scalar(x, x, n); }

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void scal_scalar(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void rot_scalar(double* x, double* y, std::size_t n, double c, double s) {
  for (std::size_t i = 0; i < n; ++i) {
    double xi = x[i], yi = y[i];
    x[i] = (c * xi) - (s * yi);
    y[i] = (s * xi) + (c * yi);
  }
}

constexpr int kMr = 4;
constexpr int kNr = 8;

void mk_scalar(int kc, const double* apack, const double* bpack, double* c,
               int ldc) {
  double acc[kMr][kNr] = {};
  for (int p = 0; p < kc; ++p) {
    const double* ap = apack + std::size_t(p) * kMr;
    const double* bp = bpack + std::size_t(p) * kNr;
    for (int i = 0; i < kMr; ++i)
      for (int j = 0; j < kNr; ++j) acc[i][j] = std::fma(ap[i], bp[j], acc[i][j]);
  }
  for (int i = 0; i < kMr; ++i)
    for (int j = 0; j < kNr; ++j) c[std::size_t(i) * ldc + j] += acc[i][j];
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{"scalar", dot_scalar, nrm2sq_scalar, axpy_scalar,
                       scal_scalar, rot_scalar, kMr, kNr, mk_scalar};
  return ops;
}

}  // namespace curvlab::kern
