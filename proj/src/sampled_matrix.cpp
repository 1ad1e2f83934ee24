#include "qsvt/sampled_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qsvt {

SampledMatrix::SampledMatrix(std::size_t m, std::size_t n)
    : m_(m), n_(n), row_tree_(m) {
  if (m == 0 || n == 0)
    throw std::invalid_argument("SampledMatrix: dimensions must be positive");
  rows_.reserve(m);
  for (std::size_t i = 0; i < m; ++i) rows_.emplace_back(n);
}

SampledMatrix SampledMatrix::build(std::size_t m, std::size_t n,
                                   const std::vector<Triplet>& entries) {
  SampledMatrix mat(m, n);
  for (const auto& t : entries) {
    if (t.i >= m || t.j >= n)
      throw std::out_of_range("SampledMatrix::build: entry (" +
                              std::to_string(t.i) + "," + std::to_string(t.j) +
                              ") out of range");
    if (mat.rows_[t.i].contains(t.j))
      throw std::invalid_argument("SampledMatrix::build: duplicate entry (" +
                                  std::to_string(t.i) + "," +
                                  std::to_string(t.j) + ")");
    mat.rows_[t.i].set(t.j, t.value);
  }
  for (std::size_t i = 0; i < m; ++i)
    mat.row_tree_.set(i, mat.rows_[i].norm_sq());
  return mat;
}

void SampledMatrix::check_row(std::size_t i) const {
  if (i >= m_) throw std::out_of_range("SampledMatrix: row index out of range");
}

void SampledMatrix::update(std::size_t i, std::size_t j, Complex v) {
  check_row(i);
  rows_[i].set(j, v);
  row_tree_.set(i, rows_[i].norm_sq());
}

Complex SampledMatrix::query(std::size_t i, std::size_t j) const {
  check_row(i);
  return rows_[i].get(j);
}

double SampledMatrix::row_norm_sq(std::size_t i) const {
  check_row(i);
  return rows_[i].norm_sq();
}

double SampledMatrix::row_norm(std::size_t i) const {
  return std::sqrt(row_norm_sq(i));
}

std::size_t SampledMatrix::sample_row(RngStream& rng) const {
  return row_tree_.sample(rng.uniform());
}

std::size_t SampledMatrix::sample_in_row(std::size_t i, RngStream& rng) const {
  check_row(i);
  return rows_[i].sample(rng);
}

std::uint64_t SampledMatrix::nnz() const {
  std::uint64_t a = 0;
  for (const auto& r : rows_) a += r.nnz();
  return a;
}

std::vector<SampledMatrix::Triplet> SampledMatrix::entries() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (std::size_t i = 0; i < m_; ++i)
    rows_[i].for_each([&](std::size_t j, Complex v) { out.push_back({i, j, v}); });
  std::sort(out.begin(), out.end(), [](const Triplet& a, const Triplet& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  return out;
}

const VectorSampler& SampledMatrix::row(std::size_t i) const {
  check_row(i);
  return rows_[i];
}

std::uint64_t SampledMatrix::node_visits() const {
  std::uint64_t v = row_tree_.node_visits();
  for (const auto& r : rows_) v += r.weights().node_visits();
  return v;
}

void SampledMatrix::reset_node_visits() const {
  row_tree_.reset_node_visits();
  for (const auto& r : rows_) r.weights().reset_node_visits();
}

SampledMatrix vector_as_matrix(const std::vector<Complex>& v) {
  SampledMatrix m(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != Complex{0.0, 0.0}) m.update(0, j, v[j]);
  return m;
}

}  // namespace qsvt
