// AVX-512F microkernel (4x16 tile). The vector kernels stay at the AVX2
// lane contract, so this variant only swaps the gemm tile; per-element fma
// chains are unchanged and results stay bit-identical.

#include "curvlab/kernels.hpp"

#if defined(CURVLAB_BUILD_AVX512) && defined(__x86_64__)
#define CURVLAB_AVX512_OK 1
#include <immintrin.h>
#endif

namespace curvlab::kern {

#if CURVLAB_AVX512_OK
namespace {

constexpr int kMr = 4;
constexpr int kNr = 16;

// 4x16 tile: 8 zmm accumulators, 4 broadcasts + 2 loads + 8 fma per k.
void mk_avx512(int kc, const double* apack, const double* bpack, double* c,
               int ldc) {
  __m512d a00 = _mm512_setzero_pd(), a01 = _mm512_setzero_pd();
  __m512d a10 = _mm512_setzero_pd(), a11 = _mm512_setzero_pd();
  __m512d a20 = _mm512_setzero_pd(), a21 = _mm512_setzero_pd();
  __m512d a30 = _mm512_setzero_pd(), a31 = _mm512_setzero_pd();
  for (int p = 0; p < kc; ++p) {
    const double* ap = apack + std::size_t(p) * kMr;
    const double* bp = bpack + std::size_t(p) * kNr;
    __m512d b0 = _mm512_loadu_pd(bp);
    __m512d b1 = _mm512_loadu_pd(bp + 8);
    __m512d a;
    a = _mm512_set1_pd(ap[0]);
    a00 = _mm512_fmadd_pd(a, b0, a00);
    a01 = _mm512_fmadd_pd(a, b1, a01);
    a = _mm512_set1_pd(ap[1]);
    a10 = _mm512_fmadd_pd(a, b0, a10);
    a11 = _mm512_fmadd_pd(a, b1, a11);
    a = _mm512_set1_pd(ap[2]);
    a20 = _mm512_fmadd_pd(a, b0, a20);
    a21 = _mm512_fmadd_pd(a, b1, a21);
    a = _mm512_set1_pd(ap[3]);
    a30 = _mm512_fmadd_pd(a, b0, a30);
    a31 = _mm512_fmadd_pd(a, b1, a31);
  }
  for (int i = 0; i < kMr; ++i) {
    double* r = c + std::size_t(i) * ldc;
    __m512d acc0 = (i == 0) ? a00 : (i == 1) ? a10 : (i == 2) ? a20 : a30;
    __m512d acc1 = (i == 0) ? a01 : (i == 1) ? a11 : (i == 2) ? a21 : a31;
    _mm512_storeu_pd(r, _mm512_add_pd(_mm512_loadu_pd(r), acc0));
    _mm512_storeu_pd(r + 8, _mm512_add_pd(_mm512_loadu_pd(r + 8), acc1));
  }
}

}  // namespace

const Ops* avx512_ops() {
  if (!__builtin_cpu_supports("avx512f")) return nullptr;
  const Ops* base = avx2_ops();
  if (!base) return nullptr;
  static const Ops ops{"avx512", base->dot, base->nrm2sq, base->axpy,
                       base->scal, base->rot, kMr, kNr, mk_avx512};
  return &ops;
}

#else

const Ops* avx512_ops() { return nullptr; }

#endif

}  // namespace curvlab::kern
