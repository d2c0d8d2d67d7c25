#pragma once
// Dataset ingestion, deterministic stratified splitting, subset sampling.

#include <cstdint>
#include <string>
#include <vector>

#include "curvlab/matrix.hpp"

namespace curvlab {

// Stream tags for counter-rng key derivation (one registry, no collisions).
namespace streams {
inline constexpr std::uint64_t split = 1;
inline constexpr std::uint64_t subsets = 2;
inline constexpr std::uint64_t init = 3;
inline constexpr std::uint64_t shuffle = 4;
inline constexpr std::uint64_t blob_means = 5;
inline constexpr std::uint64_t blob_noise = 6;
inline constexpr std::uint64_t elso = 7;
inline constexpr std::uint64_t bootstrap = 8;
inline constexpr std::uint64_t probes = 9;
inline constexpr std::uint64_t curvature_batch = 10;
inline constexpr std::uint64_t repetition = 11;
}  // namespace streams

struct Dataset {
  Matrix features;          // N x dim
  std::vector<int> labels;  // class indices
  int num_classes = 0;
  std::string name;

  int size() const { return features.rows; }
  int dim() const { return features.cols; }
};

struct SplitIndices {
  std::vector<int> train;
  std::vector<int> test;
  std::uint64_t seed = 0;
};

// kept[i] == 1 marks training index i as a member of the sampled subset
// (the group that gets removed when retraining).
struct SubsetMask {
  std::vector<std::uint8_t> kept;
  int subset_id = 0;
  double alpha = 0.0;

  int count() const {
    int c = 0;
    for (auto v : kept) c += v;
    return c;
  }
};

// optdigits convention: one sample per line, 64 integer pixels in 0..16
// followed by the label in 0..9; pixels are scaled by 1/16 into [0,1].
Dataset load_digits(const std::string& path);

// Seeded Gaussian class clusters, labels assigned round-robin (i mod classes).
Dataset synth_blobs(int n, int classes, int dim, std::uint64_t seed);

// Per-class largest-remainder apportionment of round(test_fraction * N)
// test slots, then a seeded shuffle within each class. Both index lists are
// returned sorted ascending.
SplitIndices stratified_split(const Dataset& d, double test_fraction,
                              std::uint64_t seed);

// k masks over {0..n_train-1}, each selecting floor(alpha * n_train) indices
// without replacement, independent across masks.
std::vector<SubsetMask> sample_subsets(int n_train, double alpha, int k,
                                       std::uint64_t seed);

// keep a dataset subsampled to at most n points (seeded, stratified-free,
// order preserved); used for desk-scale runs.
std::vector<int> subsample_indices(int total, int n, std::uint64_t seed);

}  // namespace curvlab
