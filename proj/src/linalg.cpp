#include "curvlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <string>

#include "curvlab/kernels.hpp"

namespace curvlab {

void SymMatrix::validate(const char* what) const {
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      double v = at(i, j);
      if (!std::isfinite(v))
        throw NumericalError(std::string(what) + ": non-finite entry at (" +
                             std::to_string(i) + "," + std::to_string(j) + ")");
      if (j > i) {
        double w = at(j, i);
        if (std::abs(v - w) > 1e-10 * std::max(1.0, std::abs(v)))
          throw NumericalError(std::string(what) + ": asymmetric at (" +
                               std::to_string(i) + "," + std::to_string(j) +
                               "): " + std::to_string(v) + " vs " + std::to_string(w));
      }
    }
  }
}

namespace detail {

double offdiag_frobenius(const Matrix& a) {
  const int n = a.rows;
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double* r = a.row(i);
    for (int j = 0; j < n; ++j)
      if (j != i) s += r[j] * r[j];
  }
  return std::sqrt(s);
}

namespace {

// One cyclic sweep of two-sided rotations over the full symmetric storage.
// Row pairs are rotated with the SIMD kernel; columns are restored from the
// rows afterwards, which keeps the matrix bitwise symmetric.
void jacobi_sweep(Matrix& a, Matrix& vt, double skip_eps) {
  const int n = a.rows;
  for (int p = 0; p < n - 1; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const double apq = a.at(p, q);
      if (std::abs(apq) <= skip_eps) continue;
      const double app = a.at(p, p);
      const double aqq = a.at(q, q);
      const double tau = (aqq - app) / (2.0 * apq);
      const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                    : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;
      const double npp = app - t * apq;
      const double nqq = aqq + t * apq;
      kern::rot(a.row(p), a.row(q), std::size_t(n), c, s);
      a.at(p, p) = npp;
      a.at(q, q) = nqq;
      a.at(p, q) = 0.0;
      a.at(q, p) = 0.0;
      for (int i = 0; i < n; ++i) {
        if (i == p || i == q) continue;
        a.at(i, p) = a.at(p, i);
        a.at(i, q) = a.at(q, i);
      }
      kern::rot(vt.row(p), vt.row(q), std::size_t(vt.cols), c, s);
    }
  }
}

}  // namespace

double jacobi_plain(Matrix& a, Matrix& vt, double tol_abs, int max_sweeps,
                    double stop_ratio) {
  const int n = a.rows;
  if (n <= 1) return 0.0;
  double off = offdiag_frobenius(a);
  const double off0 = off;
  const double skip_eps = tol_abs / (10.0 * n);
  int sweeps = 0;
  while (off > tol_abs && sweeps < max_sweeps) {
    if (stop_ratio > 0.0 && off <= stop_ratio * off0) break;
    jacobi_sweep(a, vt, skip_eps);
    off = offdiag_frobenius(a);
    ++sweeps;
  }
  return off;
}

double jacobi_blocked(Matrix& a, Matrix& vt, double tol_abs, int max_sweeps) {
  const int n = a.rows;
  const int b = kJacobiBlockSize;
  const int nb = (n + b - 1) / b;
  const int npairs = nb * (nb - 1) / 2;
  const double gate2 = tol_abs * tol_abs / (4.0 * npairs);
  const double local_tol = std::sqrt(gate2) / 3.0;

  Matrix s, vts, r, rn;
  auto blk_off = [&](int i) { return i * b; };
  auto blk_size = [&](int i) { return std::min(b, n - i * b); };

  double off = offdiag_frobenius(a);
  int sweeps = 0;
  while (off > tol_abs && sweeps < max_sweeps) {
    for (int bi = 0; bi < nb - 1; ++bi) {
      for (int bj = bi + 1; bj < nb; ++bj) {
        const int oi = blk_off(bi), si = blk_size(bi);
        const int oj = blk_off(bj), sj = blk_size(bj);
        const int m = si + sj;

        // off-mass this pair could remove; skip when negligible
        double g2 = 0.0;
        for (int i = 0; i < si; ++i) {
          const double* ri = a.row(oi + i);
          for (int j = 0; j < sj; ++j) g2 += 2.0 * ri[oj + j] * ri[oj + j];
          for (int j = 0; j < si; ++j)
            if (j != i) g2 += ri[oi + j] * ri[oi + j];
        }
        for (int i = 0; i < sj; ++i) {
          const double* ri = a.row(oj + i);
          for (int j = 0; j < sj; ++j)
            if (j != i) g2 += ri[oj + j] * ri[oj + j];
        }
        if (g2 <= gate2) continue;

        // gather the (si+sj)^2 subproblem and partially diagonalise it
        s = Matrix(m, m);
        for (int i = 0; i < m; ++i) {
          const int gi = (i < si) ? oi + i : oj + (i - si);
          const double* ri = a.row(gi);
          for (int j = 0; j < m; ++j) {
            const int gj = (j < si) ? oi + j : oj + (j - si);
            s.at(i, j) = ri[gj];
          }
        }
        vts = Matrix::identity(m);
        jacobi_plain(s, vts, local_tol, 10, 0.05);

        // rows I|J of A: R_new = Vloc^T R, applied as a panel gemm
        r = Matrix(m, n);
        for (int i = 0; i < m; ++i) {
          const int gi = (i < si) ? oi + i : oj + (i - si);
          std::memcpy(r.row(i), a.row(gi), sizeof(double) * std::size_t(n));
        }
        rn = Matrix(m, n);
        kern::gemm_acc(rn.a.data(), n, vts.a.data(), m, false, r.a.data(), n,
                       false, m, n, m);
        for (int i = 0; i < m; ++i) {
          const int gi = (i < si) ? oi + i : oj + (i - si);
          std::memcpy(a.row(gi), rn.row(i), sizeof(double) * std::size_t(n));
        }
        // mirror the updated rows into columns I|J (A stays bitwise symmetric)
        for (int gi = 0; gi < n; ++gi) {
          if ((gi >= oi && gi < oi + si) || (gi >= oj && gi < oj + sj)) continue;
          double* ri = a.row(gi);
          for (int i = 0; i < si; ++i) ri[oi + i] = rn.at(i, gi);
          for (int i = 0; i < sj; ++i) ri[oj + i] = rn.at(si + i, gi);
        }
        // intersection block comes from the local solve itself
        for (int i = 0; i < m; ++i) {
          const int gi = (i < si) ? oi + i : oj + (i - si);
          double* ri = a.row(gi);
          for (int j = 0; j < m; ++j) {
            const int gj = (j < si) ? oi + j : oj + (j - si);
            ri[gj] = s.at(i, j);
          }
        }

        // eigenvector accumulator rows get the same left rotation
        r = Matrix(m, n);
        for (int i = 0; i < m; ++i) {
          const int gi = (i < si) ? oi + i : oj + (i - si);
          std::memcpy(r.row(i), vt.row(gi), sizeof(double) * std::size_t(n));
        }
        rn = Matrix(m, n);
        kern::gemm_acc(rn.a.data(), n, vts.a.data(), m, false, r.a.data(), n,
                       false, m, n, m);
        for (int i = 0; i < m; ++i) {
          const int gi = (i < si) ? oi + i : oj + (i - si);
          std::memcpy(vt.row(gi), rn.row(i), sizeof(double) * std::size_t(n));
        }
      }
    }
    off = offdiag_frobenius(a);
    ++sweeps;
  }
  return off;
}

}  // namespace detail

EigenDecomp eig_sym(const SymMatrix& m) {
  m.validate("eig_sym input");
  const int n = m.dim;
  Matrix a(n, n);
  std::memcpy(a.a.data(), m.a.data(), sizeof(double) * m.a.size());
  Matrix vt = Matrix::identity(n);

  const double fro = m.frobenius();
  const double tol_abs = kEigOffTolRel * fro;
  if (fro > 0.0) {
    double off = (n <= kJacobiPlainCutoff)
                     ? detail::jacobi_plain(a, vt, tol_abs, kEigMaxSweeps)
                     : detail::jacobi_blocked(a, vt, tol_abs, kEigMaxSweeps);
    if (off > tol_abs)
      throw EigError("eig_sym: no convergence after " +
                     std::to_string(kEigMaxSweeps) + " sweeps on dim " +
                     std::to_string(n) + ", off-diagonal residual " +
                     std::to_string(off));
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a.at(i, i) > a.at(j, j); });

  EigenDecomp out;
  out.values.resize(std::size_t(n));
  out.vectors = Matrix(n, n);
  for (int k = 0; k < n; ++k) {
    const int src = order[std::size_t(k)];
    out.values[std::size_t(k)] = a.at(src, src);
    const double* v = vt.row(src);
    int arg = 0;
    double best = std::abs(v[0]);
    for (int i = 1; i < n; ++i) {
      double ab = std::abs(v[i]);
      if (ab > best) {
        best = ab;
        arg = i;
      }
    }
    const double sgn = (v[arg] < 0.0) ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) out.vectors.at(i, k) = sgn * v[i];
  }
  return out;
}

SymMatrix pinv_sym(const SymMatrix& m, double threshold) {
  if (threshold < 0.0) throw NumericalError("pinv_sym: negative threshold");
  EigenDecomp ed = eig_sym(m);
  const int n = m.dim;
  Matrix qw(n, n);  // Q with column k scaled by the inverted eigenvalue
  std::vector<double> w(std::size_t(n), 0.0);
  for (int k = 0; k < n; ++k) {
    double l = ed.values[std::size_t(k)];
    w[std::size_t(k)] = (std::abs(l) > threshold) ? 1.0 / l : 0.0;
  }
  for (int i = 0; i < n; ++i) {
    const double* src = ed.vectors.row(i);
    double* dst = qw.row(i);
    for (int k = 0; k < n; ++k) dst[k] = src[k] * w[std::size_t(k)];
  }
  SymMatrix out(n);
  kern::gemm_acc(out.a.data(), n, qw.a.data(), n, false,
                 ed.vectors.a.data(), n, /*transb=*/true, n, n, n);
  // kill roundoff asymmetry
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = 0.5 * (out.at(i, j) + out.at(j, i));
      out.at(i, j) = v;
      out.at(j, i) = v;
    }
  return out;
}

SymMatrix kron(const SymMatrix& a, const SymMatrix& b, int max_dim) {
  const long long dim = (long long)a.dim * b.dim;
  if (dim > max_dim)
    throw NumericalError("kron: result dim " + std::to_string(dim) +
                         " exceeds cap " + std::to_string(max_dim));
  const int p = b.dim;
  SymMatrix out{int(dim)};
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < p; ++k) {
      double* dst = out.row(i * p + k);
      for (int j = 0; j < a.dim; ++j) {
        const double aij = a.at(i, j);
        const double* brow = b.row(k);
        double* d = dst + std::size_t(j) * p;
        for (int l = 0; l < p; ++l) d[l] = aij * brow[l];
      }
    }
  return out;
}

double eval_overlap_spectra(std::vector<double> approx, std::vector<double> reference) {
  if (approx.size() != reference.size())
    throw NumericalError("eval_overlap: spectra of different sizes");
  std::sort(approx.begin(), approx.end(), std::greater<double>());
  std::sort(reference.begin(), reference.end(), std::greater<double>());
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < approx.size(); ++i) {
    double d = approx[i] - reference[i];
    num += d * d;
    den += reference[i] * reference[i];
  }
  if (den == 0.0)
    throw NumericalError("eval_overlap: reference spectrum is identically zero");
  return 1.0 - std::sqrt(num) / std::sqrt(den);
}

double eval_overlap(const SymMatrix& approx, const SymMatrix& reference) {
  if (approx.dim != reference.dim)
    throw NumericalError("eval_overlap: dimension mismatch");
  return eval_overlap_spectra(eig_sym(approx).values, eig_sym(reference).values);
}

double basis_overlap(const Matrix& approx_vecs, const Matrix& ref_vecs, int k) {
  if (approx_vecs.rows != ref_vecs.rows)
    throw NumericalError("basis_overlap: ambient dimension mismatch");
  if (k <= 0 || k > approx_vecs.cols || k > ref_vecs.cols)
    throw NumericalError("basis_overlap: k=" + std::to_string(k) +
                         " exceeds column count");
  const int n = approx_vecs.rows;
  Matrix m(k, k);
  kern::gemm_acc(m.a.data(), k, ref_vecs.a.data(), ref_vecs.cols, /*transa=*/true,
                 approx_vecs.a.data(), approx_vecs.cols, /*transb=*/false, k, k, n);
  double s = 0.0;
  for (double v : m.a) s += v * v;
  return s / k;
}

}  // namespace curvlab
