#pragma once
// Dense symmetric linear algebra: cyclic-Jacobi eigendecomposition,
// eigendecomposition pseudo-inverse, Kronecker products, spectral metrics.
//
// Everything here is a pure function of its inputs and single-threaded, so
// results are bit-reproducible. The eigensolver runs plain cyclic Jacobi up
// to kJacobiPlainCutoff and the same rotations organised block-cyclically
// (panel updates applied with the gemm kernels) above it; both share the
// convergence contract: off-diagonal Frobenius norm <= 1e-12 * ||M||_F
// within 100 sweeps, otherwise EigError.

#include <vector>

#include "curvlab/matrix.hpp"

namespace curvlab {

inline constexpr double kEigOffTolRel = 1e-12;
inline constexpr int kEigMaxSweeps = 100;
inline constexpr int kJacobiPlainCutoff = 320;
inline constexpr int kJacobiBlockSize = 64;
inline constexpr int kKronMaxDim = 20000;

EigenDecomp eig_sym(const SymMatrix& m);

// Spectral pseudo-inverse: Q diag(l_i^-1 * 1{|l_i| > threshold}) Q^T.
SymMatrix pinv_sym(const SymMatrix& m, double threshold);

// (A (x) B)[i*P+k][j*P+l] = A[i][j] * B[k][l], P = dim(B).
SymMatrix kron(const SymMatrix& a, const SymMatrix& b, int max_dim = kKronMaxDim);

// 1 - ||sort(spec(approx)) - sort(spec(ref))|| / ||sort(spec(ref))||.
double eval_overlap(const SymMatrix& approx, const SymMatrix& reference);
double eval_overlap_spectra(std::vector<double> approx, std::vector<double> reference);

// Mean squared principal-angle cosine between the leading k columns:
// (1/k) ||V_k^T U_k||_F^2. Columns must be ordered by descending eigenvalue.
double basis_overlap(const Matrix& approx_vecs, const Matrix& ref_vecs, int k);

namespace detail {
// In-place cyclic Jacobi on full symmetric storage. vt must come in as the
// identity (or a previous rotation product); its ROWS accumulate eigenvectors.
// Runs until off(A)_F <= tol_abs or sweep/ratio limits hit; returns off(A)_F.
double jacobi_plain(Matrix& a, Matrix& vt, double tol_abs, int max_sweeps,
                    double stop_ratio = 0.0);
double jacobi_blocked(Matrix& a, Matrix& vt, double tol_abs, int max_sweeps);
double offdiag_frobenius(const Matrix& a);
}  // namespace detail

}  // namespace curvlab
