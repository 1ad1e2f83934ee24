#include "qsvt/weight_tree.hpp"

#include <cmath>
#include <stdexcept>

namespace qsvt {

WeightTree::WeightTree(std::size_t leaves) : n_(leaves) {
  cap_ = 1;
  while (cap_ < n_) cap_ <<= 1;
  node_.assign(2 * cap_, 0.0);
}

double WeightTree::leaf(std::size_t i) const {
  if (i >= n_) throw std::out_of_range("WeightTree::leaf: index out of range");
  return node_[cap_ + i];
}

void WeightTree::set(std::size_t i, double w) {
  if (i >= n_) throw std::out_of_range("WeightTree::set: index out of range");
  if (!(w >= 0.0)) throw std::invalid_argument("WeightTree::set: negative or NaN weight");
  std::size_t p = cap_ + i;
  node_[p] = w;
  ++visits_;
  for (p >>= 1; p >= 1; p >>= 1) {
    node_[p] = node_[2 * p] + node_[2 * p + 1];
    visits_ += 3;
  }
  if (++updates_ >= kRebuildPeriod) rebuild();
}

std::size_t WeightTree::sample(double u) const {
  const double total = node_[1];
  ++visits_;
  if (!(total > 0.0)) throw std::domain_error("empty distribution");
  double target = u * total;
  std::size_t idx = 1;
  while (idx < cap_) {
    const double left = node_[2 * idx];
    visits_ += 2;
    if (target < left) {
      idx = 2 * idx;
    } else {
      target -= left;
      idx = 2 * idx + 1;
    }
  }
  if (node_[idx] > 0.0) return idx - cap_;
  // Rounding pushed the descent onto a zero leaf; fall back to any
  // positive leaf.
  for (std::size_t j = 0; j < n_; ++j) {
    if (node_[cap_ + j] > 0.0) return j;
  }
  throw std::domain_error("empty distribution");
}

void WeightTree::rebuild() {
  for (std::size_t p = cap_ - 1; p >= 1; --p) {
    node_[p] = node_[2 * p] + node_[2 * p + 1];
  }
  updates_ = 0;
}

}  // namespace qsvt
