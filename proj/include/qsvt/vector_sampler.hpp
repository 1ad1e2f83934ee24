#pragma once

#include <complex>
#include <cstddef>
#include <unordered_map>

#include "qsvt/rng.hpp"
#include "qsvt/weight_tree.hpp"

namespace qsvt {

using Complex = std::complex<double>;

/// One stored row (or a stand-alone vector): nonzero entries in a hash map
/// for O(1) reads, plus a weight tree over |entry|^2 carrying the intra-row
/// sampling distribution.
class VectorSampler {
 public:
  explicit VectorSampler(std::size_t n) : n_(n), tree_(n) {}

  std::size_t size() const { return n_; }
  std::size_t nnz() const { return entries_.size(); }

  void set(std::size_t j, Complex v);
  Complex get(std::size_t j) const;
  bool contains(std::size_t j) const { return entries_.count(j) != 0; }

  double norm_sq() const { return tree_.total(); }

  /// Draw index j with probability |v_j|^2 / ||v||^2.
  std::size_t sample(RngStream& rng) const { return tree_.sample(rng.uniform()); }

  const WeightTree& weights() const { return tree_; }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (const auto& [j, v] : entries_) fn(j, v);
  }

 private:
  std::size_t n_;
  WeightTree tree_;
  std::unordered_map<std::size_t, Complex> entries_;
};

inline void VectorSampler::set(std::size_t j, Complex v) {
  if (j >= n_) throw std::out_of_range("VectorSampler::set: index out of range");
  if (v == Complex{0.0, 0.0}) {
    entries_.erase(j);
    tree_.set(j, 0.0);
  } else {
    entries_[j] = v;
    tree_.set(j, std::norm(v));
  }
}

inline Complex VectorSampler::get(std::size_t j) const {
  if (j >= n_) throw std::out_of_range("VectorSampler::get: index out of range");
  const auto it = entries_.find(j);
  return it == entries_.end() ? Complex{0.0, 0.0} : it->second;
}

}  // namespace qsvt
