// Kernel selection and the packed-panel gemm/syrk drivers.
//
// The drivers are shared by every variant: only the register-tile microkernel
// differs. Packing pads slivers with zeros, so the microkernel always runs
// full tiles; fma(0, x, acc) leaves acc unchanged for finite x, which keeps
// padded and unpadded chains bit-identical.

#include "curvlab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

namespace curvlab::kern {

const Ops& ops() {
  static const Ops& selected = []() -> const Ops& {
    const char* env = std::getenv("CURVLAB_KERNELS");
    std::string want = env ? env : "";
    if (want == "scalar") return scalar_ops();
    if (want == "avx2") {
      if (const Ops* p = avx2_ops()) return *p;
      return scalar_ops();
    }
    // default (or "avx512"): widest supported variant first
    if (const Ops* p = avx512_ops()) return *p;
    if (const Ops* p = avx2_ops()) return *p;
    return scalar_ops();
  }();
  return selected;
}

namespace {

constexpr int KC = 256;
constexpr int MC = 128;
constexpr int NC = 4096;

inline double elem_a(const double* a, int lda, bool transa, int i, int p) {
  return transa ? a[std::size_t(p) * lda + i] : a[std::size_t(i) * lda + p];
}
inline double elem_b(const double* b, int ldb, bool transb, int p, int j) {
  return transb ? b[std::size_t(j) * ldb + p] : b[std::size_t(p) * ldb + j];
}

// upper_only: skip register tiles strictly below the diagonal of C
// (used by syrk; C indices here are global row/col).
void gemm_driver(double* c, int ldc, const double* a, int lda, bool transa,
                 const double* b, int ldb, bool transb, int m, int n, int k,
                 bool upper_only, const Ops& v) {
  const int mr = v.mr, nr = v.nr;
  std::vector<double> apack, bpack;
  std::vector<double> scratch(std::size_t(mr) * nr);
  for (int jc = 0; jc < n; jc += NC) {
    const int nc = std::min(NC, n - jc);
    const int nslivers = (nc + nr - 1) / nr;
    for (int pc = 0; pc < k; pc += KC) {
      const int kc = std::min(KC, k - pc);
      bpack.assign(std::size_t(nslivers) * kc * nr, 0.0);
      for (int sj = 0; sj < nslivers; ++sj) {
        double* dst = bpack.data() + std::size_t(sj) * kc * nr;
        const int j0 = jc + sj * nr;
        const int jw = std::min(nr, n - j0);
        for (int p = 0; p < kc; ++p)
          for (int jj = 0; jj < jw; ++jj)
            dst[std::size_t(p) * nr + jj] = elem_b(b, ldb, transb, pc + p, j0 + jj);
      }
      for (int ic = 0; ic < m; ic += MC) {
        const int mc = std::min(MC, m - ic);
        if (upper_only && ic > jc + nc - 1) continue;
        const int mslivers = (mc + mr - 1) / mr;
        apack.assign(std::size_t(mslivers) * kc * mr, 0.0);
        for (int si = 0; si < mslivers; ++si) {
          double* dst = apack.data() + std::size_t(si) * kc * mr;
          const int i0 = ic + si * mr;
          const int iw = std::min(mr, m - i0);
          for (int p = 0; p < kc; ++p)
            for (int ii = 0; ii < iw; ++ii)
              dst[std::size_t(p) * mr + ii] = elem_a(a, lda, transa, i0 + ii, pc + p);
        }
        for (int sj = 0; sj < nslivers; ++sj) {
          const int j0 = jc + sj * nr;
          const int jw = std::min(nr, n - j0);
          const double* bs = bpack.data() + std::size_t(sj) * kc * nr;
          for (int si = 0; si < mslivers; ++si) {
            const int i0 = ic + si * mr;
            const int iw = std::min(mr, m - i0);
            if (upper_only && i0 > j0 + jw - 1) continue;
            const double* as = apack.data() + std::size_t(si) * kc * mr;
            if (iw == mr && jw == nr) {
              v.mk(kc, as, bs, c + std::size_t(i0) * ldc + j0, ldc);
            } else {
              std::fill(scratch.begin(), scratch.end(), 0.0);
              v.mk(kc, as, bs, scratch.data(), nr);
              for (int ii = 0; ii < iw; ++ii)
                for (int jj = 0; jj < jw; ++jj)
                  c[std::size_t(i0 + ii) * ldc + (j0 + jj)] +=
                      scratch[std::size_t(ii) * nr + jj];
            }
          }
        }
      }
    }
  }
}

}  // namespace

void gemm_acc(double* c, int ldc, const double* a, int lda, bool transa,
              const double* b, int ldb, bool transb, int m, int n, int k,
              const Ops* variant) {
  if (m <= 0 || n <= 0 || k <= 0) return;
  gemm_driver(c, ldc, a, lda, transa, b, ldb, transb, m, n, k, false,
              variant ? *variant : ops());
}

void syrk_upper_acc(double* c, int d, const double* p, int r) {
  if (d <= 0 || r <= 0) return;
  gemm_driver(c, d, p, d, /*transa=*/true, p, d, /*transb=*/false, d, d, r,
              /*upper_only=*/true, ops());
}

void mirror_upper_to_lower(double* c, int d) {
  for (int i = 1; i < d; ++i)
    for (int j = 0; j < i; ++j)
      c[std::size_t(i) * d + j] = c[std::size_t(j) * d + i];
}

}  // namespace curvlab::kern
