// AVX2+FMA variants. Bit-identical to the scalar reference by construction:
// same lane structure, same combine order, fma matches std::fma (both
// correctly rounded).

#include "curvlab/kernels.hpp"

#if defined(CURVLAB_BUILD_AVX2) && (defined(__x86_64__) || defined(__i386__))
#define CURVLAB_AVX2_OK 1
#include <immintrin.h>

#include <cmath>
#endif

namespace curvlab::kern {

#if CURVLAB_AVX2_OK
namespace {

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t body = n & ~std::size_t(3);
  for (std::size_t i = 0; i < body; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  __m128d lo = _mm256_castpd256_pd128(acc);   // (l0, l1)
  __m128d hi = _mm256_extractf128_pd(acc, 1); // (l2, l3)
  __m128d pair = _mm_hadd_pd(lo, hi);         // (l0+l1, l2+l3)
  double s = _mm_cvtsd_f64(pair) + _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
  for (std::size_t i = body; i < n; ++i) s = std::fma(x[i], y[i], s);
  return s;
}

double nrm2sq_avx2(const double* x, std::size_t n) { return dot_avx2(x, x, n); }

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  __m256d va = _mm256_set1_pd(a);
  std::size_t body = n & ~std::size_t(3);
  for (std::size_t i = 0; i < body; i += 4) {
    __m256d r = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(y + i, r);
  }
  for (std::size_t i = body; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void scal_avx2(double a, double* x, std::size_t n) {
  __m256d va = _mm256_set1_pd(a);
  std::size_t body = n & ~std::size_t(3);
  for (std::size_t i = 0; i < body; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  for (std::size_t i = body; i < n; ++i) x[i] *= a;
}

void rot_avx2(double* x, double* y, std::size_t n, double c, double s) {
  __m256d vc = _mm256_set1_pd(c), vs = _mm256_set1_pd(s);
  std::size_t body = n & ~std::size_t(3);
  for (std::size_t i = 0; i < body; i += 4) {
    __m256d xi = _mm256_loadu_pd(x + i), yi = _mm256_loadu_pd(y + i);
    __m256d nx = _mm256_sub_pd(_mm256_mul_pd(vc, xi), _mm256_mul_pd(vs, yi));
    __m256d ny = _mm256_add_pd(_mm256_mul_pd(vs, xi), _mm256_mul_pd(vc, yi));
    _mm256_storeu_pd(x + i, nx);
    _mm256_storeu_pd(y + i, ny);
  }
  for (std::size_t i = body; i < n; ++i) {
    double xi = x[i], yi = y[i];
    x[i] = (c * xi) - (s * yi);
    y[i] = (s * xi) + (c * yi);
  }
}

constexpr int kMr = 4;
constexpr int kNr = 8;

// 4x8 register tile: 8 ymm accumulators, 4 broadcasts + 2 loads + 8 fma per k.
void mk_avx2(int kc, const double* apack, const double* bpack, double* c,
             int ldc) {
  __m256d a00 = _mm256_setzero_pd(), a01 = _mm256_setzero_pd();
  __m256d a10 = _mm256_setzero_pd(), a11 = _mm256_setzero_pd();
  __m256d a20 = _mm256_setzero_pd(), a21 = _mm256_setzero_pd();
  __m256d a30 = _mm256_setzero_pd(), a31 = _mm256_setzero_pd();
  for (int p = 0; p < kc; ++p) {
    const double* ap = apack + std::size_t(p) * kMr;
    const double* bp = bpack + std::size_t(p) * kNr;
    __m256d b0 = _mm256_loadu_pd(bp);
    __m256d b1 = _mm256_loadu_pd(bp + 4);
    __m256d a;
    a = _mm256_set1_pd(ap[0]);
    a00 = _mm256_fmadd_pd(a, b0, a00);
    a01 = _mm256_fmadd_pd(a, b1, a01);
    a = _mm256_set1_pd(ap[1]);
    a10 = _mm256_fmadd_pd(a, b0, a10);
    a11 = _mm256_fmadd_pd(a, b1, a11);
    a = _mm256_set1_pd(ap[2]);
    a20 = _mm256_fmadd_pd(a, b0, a20);
    a21 = _mm256_fmadd_pd(a, b1, a21);
    a = _mm256_set1_pd(ap[3]);
    a30 = _mm256_fmadd_pd(a, b0, a30);
    a31 = _mm256_fmadd_pd(a, b1, a31);
  }
  double* r0 = c;
  double* r1 = c + ldc;
  double* r2 = c + 2 * std::size_t(ldc);
  double* r3 = c + 3 * std::size_t(ldc);
  _mm256_storeu_pd(r0, _mm256_add_pd(_mm256_loadu_pd(r0), a00));
  _mm256_storeu_pd(r0 + 4, _mm256_add_pd(_mm256_loadu_pd(r0 + 4), a01));
  _mm256_storeu_pd(r1, _mm256_add_pd(_mm256_loadu_pd(r1), a10));
  _mm256_storeu_pd(r1 + 4, _mm256_add_pd(_mm256_loadu_pd(r1 + 4), a11));
  _mm256_storeu_pd(r2, _mm256_add_pd(_mm256_loadu_pd(r2), a20));
  _mm256_storeu_pd(r2 + 4, _mm256_add_pd(_mm256_loadu_pd(r2 + 4), a21));
  _mm256_storeu_pd(r3, _mm256_add_pd(_mm256_loadu_pd(r3), a30));
  _mm256_storeu_pd(r3 + 4, _mm256_add_pd(_mm256_loadu_pd(r3 + 4), a31));
}

bool cpu_ok() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

}  // namespace

const Ops* avx2_ops() {
  if (!cpu_ok()) return nullptr;
  static const Ops ops{"avx2", dot_avx2, nrm2sq_avx2, axpy_avx2,
                       scal_avx2, rot_avx2, kMr, kNr, mk_avx2};
  return &ops;
}

#else

const Ops* avx2_ops() { return nullptr; }

#endif

}  // namespace curvlab::kern
