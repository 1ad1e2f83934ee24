#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qsvt/vector_sampler.hpp"

namespace qsvt {

/// Tree-backed m x n matrix with l2-sampling access.
///
/// Storage is one VectorSampler per row plus a weight tree over the row
/// norms ||M_(i,.)||^2, so the total weight is ||M||_F^2 and both the
/// row distribution R_M and the intra-row distributions R_M^i are
/// sampleable by tree descent. All-zero rows carry weight 0 and are never
/// sampled.
///
/// Thread model: many concurrent readers (query/sample) or one exclusive
/// writer (update); callers must not interleave writes with reads. RNG
/// state is always passed in by the caller.
class SampledMatrix {
 public:
  struct Triplet {
    std::size_t i, j;
    Complex value;
  };

  SampledMatrix(std::size_t m, std::size_t n);

  /// Build from triplets. Duplicate (i,j) pairs and out-of-range indices
  /// are rejected.
  static SampledMatrix build(std::size_t m, std::size_t n,
                             const std::vector<Triplet>& entries);

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }

  void update(std::size_t i, std::size_t j, Complex v);
  Complex query(std::size_t i, std::size_t j) const;

  double frobenius_sq() const { return row_tree_.total(); }
  double row_norm_sq(std::size_t i) const;
  double row_norm(std::size_t i) const;

  /// Draw row i with probability ||M_(i,.)||^2 / ||M||_F^2.
  std::size_t sample_row(RngStream& rng) const;
  /// Draw column j with probability |M_(i,j)|^2 / ||M_(i,.)||^2.
  std::size_t sample_in_row(std::size_t i, RngStream& rng) const;

  std::uint64_t nnz() const;

  /// Entries sorted by (i, j); used by serialization and tests.
  std::vector<Triplet> entries() const;

  const VectorSampler& row(std::size_t i) const;

  /// Total tree-node accesses since the last reset, over all trees.
  std::uint64_t node_visits() const;
  void reset_node_visits() const;

 private:
  std::size_t m_, n_;
  std::vector<VectorSampler> rows_;
  WeightTree row_tree_;

  void check_row(std::size_t i) const;
};

/// Store a vector as the single row of a 1 x n SampledMatrix.
SampledMatrix vector_as_matrix(const std::vector<Complex>& v);

}  // namespace qsvt
