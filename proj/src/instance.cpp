#include "qsvt/instance.hpp"

#include <stdexcept>

namespace qsvt {

namespace {

DenseMatrix gaussian(std::size_t m, std::size_t k, RngStream& rng, bool real) {
  DenseMatrix G(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k));
  for (Eigen::Index j = 0; j < G.cols(); ++j)
    for (Eigen::Index i = 0; i < G.rows(); ++i) {
      const double re = rng.normal();
      const double im = real ? 0.0 : rng.normal();
      G(i, j) = Complex{re, im};
    }
  return G;
}

}  // namespace

DenseMatrix random_orthonormal(std::size_t m, std::size_t k, RngStream& rng,
                               bool real) {
  if (k > m)
    throw std::invalid_argument("random_orthonormal: k must be <= m");
  const DenseMatrix G = gaussian(m, k, rng, real);
  Eigen::HouseholderQR<DenseMatrix> qr(G);
  DenseMatrix Q = qr.householderQ() *
                  DenseMatrix::Identity(static_cast<Eigen::Index>(m),
                                        static_cast<Eigen::Index>(k));
  return Q;
}

DenseMatrix synthesize_matrix(std::size_t m, std::size_t n,
                              const std::vector<double>& sigma, RngStream& rng,
                              bool real) {
  if (sigma.size() > std::min(m, n))
    throw std::invalid_argument("synthesize_matrix: rank exceeds min(m, n)");
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (!(sigma[i] > 0.0))
      throw std::invalid_argument(
          "synthesize_matrix: singular values must be positive");
    if (i > 0 && sigma[i] > sigma[i - 1])
      throw std::invalid_argument(
          "synthesize_matrix: singular values must be non-increasing");
  }
  const auto k = sigma.size();
  if (k == 0)
    return DenseMatrix::Zero(static_cast<Eigen::Index>(m),
                             static_cast<Eigen::Index>(n));
  const DenseMatrix U = random_orthonormal(m, k, rng, real);
  const DenseMatrix V = random_orthonormal(n, k, rng, real);
  Eigen::VectorXd s(static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < k; ++i) s(static_cast<Eigen::Index>(i)) = sigma[i];
  return U * s.asDiagonal() * V.adjoint();
}

DenseVector random_unit_vector(std::size_t m, RngStream& rng, bool real) {
  DenseVector v = gaussian(m, 1, rng, real).col(0);
  const double nv = v.norm();
  if (nv == 0.0) return random_unit_vector(m, rng, real);
  return v / nv;
}

DenseVector aligned_unit_vector(const DenseMatrix& A, RngStream& rng) {
  const SmallSVD s = svd(A);
  if (s.rank() == 0)
    throw std::domain_error("aligned_unit_vector: zero matrix");
  const DenseVector coef =
      random_unit_vector(static_cast<std::size_t>(s.rank()), rng);
  DenseVector b = s.U * coef;
  return b / b.norm();
}

SampledMatrix dense_to_sampled(const DenseMatrix& A, double drop_tol) {
  std::vector<SampledMatrix::Triplet> entries;
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      if (std::abs(A(i, j)) > drop_tol)
        entries.push_back({static_cast<std::size_t>(i),
                           static_cast<std::size_t>(j), A(i, j)});
  return SampledMatrix::build(static_cast<std::size_t>(A.rows()),
                              static_cast<std::size_t>(A.cols()), entries);
}

}  // namespace qsvt
