#pragma once

#include <vector>

#include "qsvt/sampled_matrix.hpp"
#include "qsvt/svt_core.hpp"

namespace qsvt {

/// Synthetic-instance helpers shared by the CLI generator and the tests.

/// m x k matrix with orthonormal columns (QR of a Gaussian draw), k <= m.
/// real = true restricts the draw to real entries.
DenseMatrix random_orthonormal(std::size_t m, std::size_t k, RngStream& rng,
                               bool real = false);

/// A = U diag(sigma) V^* with prescribed nonzero spectrum. sigma must be
/// positive and non-increasing with size <= min(m, n).
DenseMatrix synthesize_matrix(std::size_t m, std::size_t n,
                              const std::vector<double>& sigma, RngStream& rng,
                              bool real = false);

/// Unit-norm Gaussian vector of length m.
DenseVector random_unit_vector(std::size_t m, RngStream& rng,
                               bool real = false);

/// Unit-norm vector inside the column space of A (random coefficients over
/// the left singular vectors), so its projection fraction is exactly 1.
DenseVector aligned_unit_vector(const DenseMatrix& A, RngStream& rng);

/// SampledMatrix from a dense matrix; entries with |a_ij| <= drop_tol are
/// omitted.
SampledMatrix dense_to_sampled(const DenseMatrix& A, double drop_tol = 0.0);

}  // namespace qsvt
