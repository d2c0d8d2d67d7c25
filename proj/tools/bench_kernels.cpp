// Quick throughput check for the kernel variants (not a ctest target).

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "curvlab/kernels.hpp"
#include "curvlab/linalg.hpp"

using clk = std::chrono::steady_clock;

static double secs(clk::time_point a, clk::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

int main() {
  namespace k = curvlab::kern;
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  std::printf("active kernels: %s\n", k::ops().name);

  // syrk: G(d x d) += P^T P, the GGN-assembly shape
  for (int d : {512, 1024, 2048}) {
    int r = 1024;
    std::vector<double> p(std::size_t(r) * d), c(std::size_t(d) * d, 0.0);
    for (auto& v : p) v = u(gen);
    auto t0 = clk::now();
    k::syrk_upper_acc(c.data(), d, p.data(), r);
    auto t1 = clk::now();
    double flops = double(r) * d * d;  // upper half * 2 flops
    std::printf("syrk d=%4d r=%d: %.3fs  %.1f GFLOP/s\n", d, r, secs(t0, t1),
                flops / secs(t0, t1) / 1e9);
  }

  // gemm square
  for (int n : {512, 1024, 2048}) {
    std::vector<double> a(std::size_t(n) * n), b(std::size_t(n) * n),
        c(std::size_t(n) * n, 0.0);
    for (auto& v : a) v = u(gen);
    for (auto& v : b) v = u(gen);
    auto t0 = clk::now();
    k::gemm_acc(c.data(), n, a.data(), n, false, b.data(), n, false, n, n, n);
    auto t1 = clk::now();
    double flops = 2.0 * n * n * n;
    std::printf("gemm n=%4d: %.3fs  %.1f GFLOP/s\n", n, secs(t0, t1),
                flops / secs(t0, t1) / 1e9);
  }

  // rot / dot streaming
  {
    int n = 1 << 20;
    std::vector<double> x(n), y(n);
    for (auto& v : x) v = u(gen);
    for (auto& v : y) v = u(gen);
    auto t0 = clk::now();
    for (int it = 0; it < 100; ++it) k::rot(x.data(), y.data(), n, 0.8, 0.6);
    auto t1 = clk::now();
    std::printf("rot  n=2^20 x100: %.3fs  %.1f GFLOP/s\n", secs(t0, t1),
                100.0 * 6.0 * n / secs(t0, t1) / 1e9);
    double acc = 0;
    auto t2 = clk::now();
    for (int it = 0; it < 200; ++it) acc += k::dot(x.data(), y.data(), n);
    auto t3 = clk::now();
    std::printf("dot  n=2^20 x200: %.3fs  %.1f GFLOP/s (acc=%g)\n", secs(t2, t3),
                200.0 * 2.0 * n / secs(t2, t3) / 1e9, acc);
  }

  // eigendecomposition at pipeline-relevant sizes
  for (int n : {256, 600, 1210, 2026}) {
    curvlab::SymMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        double v = u(gen);
        m.at(i, j) = v;
        m.at(j, i) = v;
      }
    auto t0 = clk::now();
    auto ed = curvlab::eig_sym(m);
    auto t1 = clk::now();
    std::printf("eig  n=%4d: %.2fs (lmax=%.3f)\n", n, secs(t0, t1), ed.values[0]);
  }
  return 0;
}
