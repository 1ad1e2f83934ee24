#pragma once

#include <cstddef>
#include <vector>

#include "qsvt/sampled_matrix.hpp"
#include "qsvt/svt_core.hpp"

namespace qsvt {

/// Implicit row sketch S of A: r row indices drawn i.i.d. from R_A plus
/// per-row scalings ||A||_F / (sqrt(r) ||A_(p_s,.)||). Row s of S
/// materializes as scale_s * A_(p_s,.); S itself is never formed in the
/// production path. ||S||_F = ||A||_F exactly by construction, and every
/// row of S has norm ||A||_F / sqrt(r).
struct RowSketch {
  std::size_t r = 0;
  std::vector<std::size_t> row_indices;
  std::vector<double> row_scales;
  double frob = 0;  // ||A||_F
  const SampledMatrix* source = nullptr;

  double row_norm() const;  // common norm of every sketch row
};

/// Explicit column sketch W of S: c column indices plus scalings, with the
/// r x c dense matrix W_(s,t) = S_(s,q_t) ||A||_F / (sqrt(c) ||S_(.,q_t)||).
struct WSketch {
  std::size_t c = 0;
  std::vector<std::size_t> col_indices;
  std::vector<double> col_scales;
  DenseMatrix W;
};

/// Draw r row indices i.i.d. from R_A (duplicates kept as distinct sketch
/// rows). Throws std::domain_error on an all-zero matrix.
RowSketch sample_rows(const SampledMatrix& A, std::size_t r, RngStream& rng);

/// Draw c column indices (uniform sketch row, then intra-row sample of the
/// source row; the intra-row distribution of S equals that of A) and fill W
/// by querying the r*c needed entries of A.
WSketch sample_columns(const SampledMatrix& A, const RowSketch& rs,
                       std::size_t c, RngStream& rng);

/// Column j of S as an r-vector (scale_s * A_(p_s,j)), via r entry queries.
DenseVector s_column(const RowSketch& rs, std::size_t j);

/// Dense S (r x n). Test/validation use only; production stays implicit.
DenseMatrix materialize_s(const RowSketch& rs);

}  // namespace qsvt
