#pragma once
// Data-parallel inner-loop kernels with runtime-dispatched SIMD variants.
//
// The scalar implementations are the reference: they pin down the exact
// floating-point evaluation order, and every SIMD variant must produce
// bit-identical results (equivalence-tested in tests/test_kernels.cpp).
// That makes kernel selection invisible to the rest of the project, which
// needs bit-reproducible numerics.
//
// Contracts:
//  * dot / nrm2sq: the body (n rounded down to a multiple of 4) accumulates
//    into 4 independent fma chains, lane j holding indices == j (mod 4).
//    Lanes combine as (l0+l1)+(l2+l3); the tail then folds in sequentially
//    with fma. AVX2 maps the lanes onto one ymm register.
//  * axpy: y[i] = fma(a, x[i], y[i]), elementwise.
//  * scal: x[i] *= a.
//  * rot:  (x[i], y[i]) <- (c*x[i] - s*y[i], s*x[i] + c*y[i]), each product
//    rounded separately (no fma), elementwise.
//  * gemm/syrk: every output element accumulates one fma chain per k-panel
//    (k ascending within the panel, panels in ascending order, each panel
//    result added to C once). Panel and tile constants are fixed, never
//    hardware-adaptive, so any register-tile shape gives the same bits.

#include <cstddef>

namespace curvlab::kern {

struct Ops {
  const char* name;
  double (*dot)(const double* x, const double* y, std::size_t n);
  double (*nrm2sq)(const double* x, std::size_t n);
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  void (*scal)(double a, double* x, std::size_t n);
  void (*rot)(double* x, double* y, std::size_t n, double c, double s);
  // Register tile shape of the microkernel below; pack slivers use it.
  int mr;
  int nr;
  // Full-tile microkernel: C(mr x nr, leading dim ldc) += Apack^T Bpack.
  // Apack is kc x mr, Bpack kc x nr, both contiguous sliver layouts.
  void (*mk)(int kc, const double* apack, const double* bpack, double* c,
             int ldc);
};

// Active kernel set: picked once from CPUID, overridable with
// CURVLAB_KERNELS=scalar|avx2|avx512 (unsupported values fall back).
const Ops& ops();

const Ops& scalar_ops();
const Ops* avx2_ops();    // nullptr when not compiled in / not supported
const Ops* avx512_ops();  // ditto; differs from avx2 in the microkernel only

inline double dot(const double* x, const double* y, std::size_t n) { return ops().dot(x, y, n); }
inline double nrm2sq(const double* x, std::size_t n) { return ops().nrm2sq(x, n); }
inline void axpy(double a, const double* x, double* y, std::size_t n) { ops().axpy(a, x, y, n); }
inline void scal(double a, double* x, std::size_t n) { ops().scal(a, x, n); }
inline void rot(double* x, double* y, std::size_t n, double c, double s) { ops().rot(x, y, n, c, s); }

// ---------------------------------------------------------------- drivers ---
// Packed-panel GEMM accumulate: C(m x n, ldc) += op(A) * op(B) where
// op(A) is m x k and op(B) is k x n. trans flags refer to the stored layout:
// transa=false means A is stored m x k (lda), true means k x m.
void gemm_acc(double* c, int ldc, const double* a, int lda, bool transa,
              const double* b, int ldb, bool transb, int m, int n, int k,
              const Ops* variant = nullptr);

// Symmetric rank-k accumulate: C(d x d, ldc=d) += P^T P with P stored r x d.
// Only tiles intersecting the upper triangle are touched; call
// mirror_upper_to_lower once assembly is finished.
void syrk_upper_acc(double* c, int d, const double* p, int r);

void mirror_upper_to_lower(double* c, int d);

}  // namespace curvlab::kern
