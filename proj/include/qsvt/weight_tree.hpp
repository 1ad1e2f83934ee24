#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qsvt {

/// Flat complete binary tree over non-negative leaf weights.
///
/// Layout: 1-based array, node_[1] is the root, leaves occupy
/// [cap_, 2*cap_) where cap_ is the leaf count rounded up to a power of
/// two. Absent leaves weigh zero. Internal nodes always store the exact
/// floating-point sum of their two children: updates rewrite the leaf and
/// recompute every ancestor from its children, so tree-internal
/// consistency never drifts; only the fixed summation order differs from
/// a sequential sum.
///
/// sample(u) descends from the root against the scaled variate u*total,
/// returning a leaf with probability proportional to its weight.
///
/// Node accesses are counted (reads and writes alike) so callers can
/// assert the per-operation cost contract.
class WeightTree {
 public:
  explicit WeightTree(std::size_t leaves);

  std::size_t leaves() const { return n_; }
  double total() const { return node_[1]; }
  double leaf(std::size_t i) const;

  /// Set leaf i to weight w (w >= 0) and refresh the ancestor sums.
  void set(std::size_t i, double w);

  /// Map u in [0,1) to a leaf index. Throws std::domain_error("empty
  /// distribution") when the total weight is zero.
  std::size_t sample(double u) const;

  /// Recompute all internal sums bottom-up.
  void rebuild();

  std::uint64_t node_visits() const { return visits_; }
  void reset_node_visits() const { visits_ = 0; }

 private:
  std::size_t n_ = 0;
  std::size_t cap_ = 1;
  std::vector<double> node_;
  mutable std::uint64_t visits_ = 0;
  std::uint64_t updates_ = 0;

  // Rebuild period guard; with bottom-up recomputation the rebuild result
  // is identical, so this only bounds worst-case accumulated rounding.
  static constexpr std::uint64_t kRebuildPeriod = 1ull << 20;
};

}  // namespace qsvt
