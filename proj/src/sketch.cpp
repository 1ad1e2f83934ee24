#include "qsvt/sketch.hpp"

#include <cmath>
#include <stdexcept>

namespace qsvt {

double RowSketch::row_norm() const {
  return frob / std::sqrt(static_cast<double>(r));
}

RowSketch sample_rows(const SampledMatrix& A, std::size_t r, RngStream& rng) {
  if (r == 0) throw std::invalid_argument("sample_rows: r must be positive");
  if (!(A.frobenius_sq() > 0.0))
    throw std::domain_error("sample_rows: zero matrix has no row distribution");
  RowSketch rs;
  rs.r = r;
  rs.frob = std::sqrt(A.frobenius_sq());
  rs.source = &A;
  rs.row_indices.reserve(r);
  rs.row_scales.reserve(r);
  const double sqrt_r = std::sqrt(static_cast<double>(r));
  for (std::size_t s = 0; s < r; ++s) {
    const std::size_t p = A.sample_row(rng);
    rs.row_indices.push_back(p);
    rs.row_scales.push_back(rs.frob / (sqrt_r * A.row_norm(p)));
  }
  return rs;
}

WSketch sample_columns(const SampledMatrix& A, const RowSketch& rs,
                       std::size_t c, RngStream& rng) {
  if (c == 0) throw std::invalid_argument("sample_columns: c must be positive");
  if (rs.source != &A)
    throw std::invalid_argument("sample_columns: sketch does not refer to A");
  WSketch ws;
  ws.c = c;
  ws.col_indices.reserve(c);
  ws.col_scales.reserve(c);
  const double sqrt_c = std::sqrt(static_cast<double>(c));
  for (std::size_t t = 0; t < c; ++t) {
    const std::size_t s = static_cast<std::size_t>(rng.uniform_int(rs.r));
    ws.col_indices.push_back(A.sample_in_row(rs.row_indices[s], rng));
  }
  ws.W.resize(static_cast<Eigen::Index>(rs.r), static_cast<Eigen::Index>(c));
  for (std::size_t t = 0; t < c; ++t) {
    const DenseVector col = s_column(rs, ws.col_indices[t]);
    const double col_norm = col.norm();
    const double scale = rs.frob / (sqrt_c * col_norm);
    ws.col_scales.push_back(scale);
    ws.W.col(static_cast<Eigen::Index>(t)) = scale * col;
  }
  return ws;
}

DenseVector s_column(const RowSketch& rs, std::size_t j) {
  if (j >= rs.source->cols())
    throw std::out_of_range("s_column: column index out of range");
  DenseVector col(static_cast<Eigen::Index>(rs.r));
  for (std::size_t s = 0; s < rs.r; ++s)
    col(static_cast<Eigen::Index>(s)) =
        rs.row_scales[s] * rs.source->query(rs.row_indices[s], j);
  return col;
}

DenseMatrix materialize_s(const RowSketch& rs) {
  const auto n = static_cast<Eigen::Index>(rs.source->cols());
  DenseMatrix S = DenseMatrix::Zero(static_cast<Eigen::Index>(rs.r), n);
  for (std::size_t s = 0; s < rs.r; ++s) {
    rs.source->row(rs.row_indices[s]).for_each([&](std::size_t j, Complex v) {
      S(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(j)) =
          rs.row_scales[s] * v;
    });
  }
  return S;
}

}  // namespace qsvt
