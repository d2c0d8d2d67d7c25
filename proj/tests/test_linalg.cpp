#include "curvlab/linalg.hpp"

#include <cmath>

#include "curvlab/kernels.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace curvlab;
using testutil::frob_dist;
using testutil::random_sym;
using testutil::reconstruct;

namespace {

SymMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  SymMatrix m(int(rows.size()));
  int i = 0;
  for (auto& r : rows) {
    int j = 0;
    for (double v : r) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

void check_eig_contract(const SymMatrix& m, const EigenDecomp& ed) {
  const int n = m.dim;
  // reconstruction
  double rel = frob_dist(reconstruct(ed), m) / std::max(1.0, m.frobenius());
  CHECK(rel <= 1e-8);
  // orthonormality ||Q^T Q - I||_F <= 1e-10 * dim
  double s = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double dot = 0.0;
      for (int i = 0; i < n; ++i) dot += ed.vectors.at(i, a) * ed.vectors.at(i, b);
      double d = dot - (a == b ? 1.0 : 0.0);
      s += d * d;
    }
  CHECK(std::sqrt(s) <= 1e-10 * n);
  // sorted non-increasing
  for (std::size_t k = 1; k < ed.values.size(); ++k)
    CHECK(ed.values[k] <= ed.values[k - 1]);
}

}  // namespace

TEST_CASE("eig_sym: identity and diagonal fixtures") {
  auto ed = eig_sym(SymMatrix::identity(3));
  for (double v : ed.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
  check_eig_contract(SymMatrix::identity(3), ed);

  auto d = eig_sym(SymMatrix::diag({5.0, 2.0, -1.0}));
  CHECK(d.values[0] == doctest::Approx(5.0));
  CHECK(d.values[1] == doctest::Approx(2.0));
  CHECK(d.values[2] == doctest::Approx(-1.0));
  // axis-aligned, sign fixed positive
  CHECK(d.vectors.at(0, 0) == doctest::Approx(1.0));
  CHECK(d.vectors.at(1, 1) == doctest::Approx(1.0));
  CHECK(d.vectors.at(2, 2) == doctest::Approx(1.0));
}

TEST_CASE("eig_sym: 2x2 hand-computed") {
  // [[2,1],[1,2]]: eigenvalues 3 and 1, eigenvectors (1,1)/sqrt2, (1,-1)/sqrt2
  auto ed = eig_sym(from_rows({{2, 1}, {1, 2}}));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(ed.values[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(ed.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ed.vectors.at(0, 0) == doctest::Approx(r));
  CHECK(ed.vectors.at(1, 0) == doctest::Approx(r));
  CHECK(ed.vectors.at(0, 1) == doctest::Approx(r));
  CHECK(ed.vectors.at(1, 1) == doctest::Approx(-r));
}

TEST_CASE("eig_sym: reconstruction on random fixtures up to dim 200") {
  for (int n : {1, 2, 5, 17, 60, 200}) {
    SymMatrix m = random_sym(n, 100 + std::uint64_t(n));
    check_eig_contract(m, eig_sym(m));
  }
}

TEST_CASE("eig_sym: blocked path (dim > cutoff) matches the plain path") {
  const int n = kJacobiPlainCutoff + 80;
  SymMatrix m = random_sym(n, 4242);
  auto ed = eig_sym(m);
  check_eig_contract(m, ed);

  // same eigenvalues through the plain path
  Matrix a(n, n);
  std::copy(m.a.begin(), m.a.end(), a.a.begin());
  Matrix vt = Matrix::identity(n);
  detail::jacobi_plain(a, vt, kEigOffTolRel * m.frobenius(), kEigMaxSweeps);
  std::vector<double> plain(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) plain[std::size_t(i)] = a.at(i, i);
  std::sort(plain.begin(), plain.end(), std::greater<double>());
  for (int i = 0; i < n; ++i)
    CHECK(ed.values[std::size_t(i)] ==
          doctest::Approx(plain[std::size_t(i)]).epsilon(1e-9).scale(m.frobenius()));
}

TEST_CASE("eig_sym: deterministic output for identical input") {
  SymMatrix m = random_sym(40, 7);
  auto a = eig_sym(m), b = eig_sym(m);
  CHECK(a.values == b.values);
  CHECK(a.vectors.a == b.vectors.a);
}

TEST_CASE("eig_sym: zero matrix") {
  auto ed = eig_sym(SymMatrix(5));
  for (double v : ed.values) CHECK(v == 0.0);
  check_eig_contract(SymMatrix(5), ed);
}

TEST_CASE("eig_sym rejects asymmetric and non-finite input") {
  SymMatrix bad(2);
  bad.at(0, 1) = 1.0;
  bad.at(1, 0) = 2.0;
  CHECK_THROWS_AS(eig_sym(bad), NumericalError);
  SymMatrix nan(2);
  nan.at(0, 0) = std::nan("");
  CHECK_THROWS_AS(eig_sym(nan), NumericalError);
}

TEST_CASE("pinv_sym: fixtures") {
  auto p1 = pinv_sym(SymMatrix::diag({2.0, 0.0}), 1e-4);
  CHECK(p1.at(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(p1.at(1, 1) == doctest::Approx(0.0));
  CHECK(p1.at(0, 1) == doctest::Approx(0.0));

  auto p2 = pinv_sym(SymMatrix::identity(4), 1e-4);
  CHECK(frob_dist(p2, SymMatrix::identity(4)) <= 1e-12);

  auto p3 = pinv_sym(from_rows({{2, 1}, {1, 2}}), 1e-4);
  CHECK(p3.at(0, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(p3.at(0, 1) == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
  CHECK(p3.at(1, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("pinv_sym: Moore-Penrose identities away from the threshold") {
  for (int n : {3, 12, 40}) {
    SymMatrix m = random_sym(n, 900 + std::uint64_t(n));
    // make it rank deficient: project out two directions
    auto ed = eig_sym(m);
    ed.values[0] = 0.0;
    if (n > 1) ed.values[std::size_t(n - 1)] = 0.0;
    SymMatrix md = reconstruct(ed);
    SymMatrix pinv = pinv_sym(md, 1e-10);

    // M M+ M = M and M+ M M+ = M+ (within 1e-8 relative Frobenius)
    auto mul = [n](const SymMatrix& x, const SymMatrix& y) {
      SymMatrix r(n);
      kern::gemm_acc(r.a.data(), n, x.a.data(), n, false, y.a.data(), n, false,
                     n, n, n);
      return r;
    };
    SymMatrix mpm = mul(mul(md, pinv), md);
    CHECK(frob_dist(mpm, md) <= 1e-8 * std::max(1.0, md.frobenius()));
    SymMatrix pmp = mul(mul(pinv, md), pinv);
    CHECK(frob_dist(pmp, pinv) <= 1e-8 * std::max(1.0, pinv.frobenius()));
  }
}

TEST_CASE("pinv_sym: zero threshold on full-rank equals the true inverse") {
  const int n = 24;
  SymMatrix m = random_sym(n, 31);
  for (int i = 0; i < n; ++i) m.at(i, i) += 4.0;  // keep it well conditioned
  SymMatrix inv = pinv_sym(m, 0.0);
  Matrix prod(n, n);
  kern::gemm_acc(prod.a.data(), n, inv.a.data(), n, false, m.a.data(), n, false,
                 n, n, n);
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double d = prod.at(i, j) - (i == j ? 1.0 : 0.0);
      s += d * d;
    }
  CHECK(std::sqrt(s) <= 1e-8 * n);
}

TEST_CASE("kron: fixtures, spectra and mixed-product property") {
  auto i4 = kron(SymMatrix::identity(2), SymMatrix::identity(2));
  CHECK(frob_dist(i4, SymMatrix::identity(4)) == 0.0);

  auto k = kron(SymMatrix::diag({1.0, 2.0}), from_rows({{3, 1}, {1, 3}}));
  SymMatrix expect(4);
  expect.at(0, 0) = 3; expect.at(0, 1) = 1; expect.at(1, 0) = 1; expect.at(1, 1) = 3;
  expect.at(2, 2) = 6; expect.at(2, 3) = 2; expect.at(3, 2) = 2; expect.at(3, 3) = 6;
  CHECK(frob_dist(k, expect) == 0.0);

  // spectral identity: eigenvalues of a (x) b are all pairwise products
  SymMatrix a = random_sym(2, 55), b = random_sym(2, 56);
  auto ea = eig_sym(a), eb = eig_sym(b);
  std::vector<double> prods;
  for (double la : ea.values)
    for (double lb : eb.values) prods.push_back(la * lb);
  std::sort(prods.begin(), prods.end(), std::greater<double>());
  auto ek = eig_sym(kron(a, b));
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(ek.values[i] == doctest::Approx(prods[i]).epsilon(1e-12));

  // (A (x) S)(A' (x) S') = (A A') (x) (S S') on symmetric commuting fixtures
  // (use diagonal ones so products stay symmetric)
  SymMatrix a2 = SymMatrix::diag({2.0, -1.0});
  SymMatrix s2 = SymMatrix::diag({0.5, 3.0});
  SymMatrix lhs(4);
  auto ka = kron(a, s2);
  auto kb = kron(a2, b);
  kern::gemm_acc(lhs.a.data(), 4, ka.a.data(), 4, false, kb.a.data(), 4, false, 4, 4, 4);
  Matrix aa2(2, 2), sb(2, 2);
  kern::gemm_acc(aa2.a.data(), 2, a.a.data(), 2, false, a2.a.data(), 2, false, 2, 2, 2);
  kern::gemm_acc(sb.a.data(), 2, s2.a.data(), 2, false, b.a.data(), 2, false, 2, 2, 2);
  // kron of (possibly asymmetric) products, expanded by hand
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int kx = 0; kx < 2; ++kx)
        for (int l = 0; l < 2; ++l)
          CHECK(lhs.at(i * 2 + kx, j * 2 + l) ==
                doctest::Approx(aa2.at(i, j) * sb.at(kx, l)).epsilon(1e-12));

  CHECK_THROWS_AS(kron(SymMatrix::identity(200), SymMatrix::identity(200)),
                  NumericalError);
}

TEST_CASE("eval_overlap: fixtures and failure") {
  SymMatrix m = random_sym(6, 77);
  CHECK(eval_overlap(m, m) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eval_overlap(SymMatrix(4), random_sym(4, 78)) == doctest::Approx(0.0));
  double v = eval_overlap(SymMatrix::diag({2.0, 1.0}), SymMatrix::diag({1.0, 1.0}));
  CHECK(v == doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(eval_overlap(random_sym(3, 79), SymMatrix(3)), NumericalError);
}

TEST_CASE("basis_overlap: fixtures and failure") {
  SymMatrix m = random_sym(8, 88);
  auto ed = eig_sym(m);
  for (int k : {1, 3, 8})
    CHECK(basis_overlap(ed.vectors, ed.vectors, k) == doctest::Approx(1.0).epsilon(1e-12));

  Matrix e1(2, 1), e2(2, 1), mix(2, 1);
  e1.at(0, 0) = 1.0;
  e2.at(1, 0) = 1.0;
  mix.at(0, 0) = 1.0 / std::sqrt(2.0);
  mix.at(1, 0) = 1.0 / std::sqrt(2.0);
  CHECK(basis_overlap(e1, e2, 1) == doctest::Approx(0.0));
  CHECK(basis_overlap(mix, e1, 1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(basis_overlap(e1, e2, 2), NumericalError);
}
