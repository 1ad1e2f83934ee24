#pragma once

#include <Eigen/Dense>

#include "qsvt/spectral_fn.hpp"

namespace qsvt {

using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

/// Thin SVD of a small dense matrix, truncated at the rank cutoff tau:
/// only singular values strictly above tau are retained.
struct SmallSVD {
  DenseMatrix U;          // rows x k, orthonormal columns
  Eigen::VectorXd sigma;  // k positive values, non-increasing
  DenseMatrix V;          // cols x k, orthonormal columns
  double tau = 0;

  Eigen::Index rank() const { return sigma.size(); }
  DenseMatrix reconstruct() const;
};

/// Default cutoff: max(m, n) * machine epsilon * sigma_max(W).
double default_tau(const DenseMatrix& W);

/// Thin SVD via the dense backend. tau < 0 selects default_tau(W).
/// Throws on non-finite entries.
SmallSVD svd(const DenseMatrix& W, double tau = -1.0);

/// Singular values only (non-increasing, full min(m,n) list).
Eigen::VectorXd singular_values(const DenseMatrix& M);
double spectral_norm(const DenseMatrix& M);

/// Phi_f(M) = sum_i f(sigma_i) u_i v_i^*, from the SVD of M.
DenseMatrix phi(const SmallSVD& m_svd, const SpectralFunction& f);

/// Phi_f(M^*) = sum_i f(sigma_i) v_i u_i^*, from the SVD of M.
DenseMatrix phi_adjoint(const SmallSVD& m_svd, const SpectralFunction& f);

/// The r x r matrix Phi_inv(W) Phi_f(W^*) Phi_inv(W) Phi_inv(W^*),
/// computed in closed form as U diag(f(sigma)/sigma^3) U^*.
struct MidMatrix {
  DenseMatrix P;  // r x r, Hermitian for real-valued f
};

MidMatrix mid_matrix(const SmallSVD& w_svd, const SpectralFunction& f);

/// Reference P for a densely materialized S (test/validation use):
/// U_s diag(f(sigma)/sigma^3) U_s^* from the SVD of S.
DenseMatrix p_reference(const DenseMatrix& s_dense, const SpectralFunction& f,
                        double tau = -1.0);

}  // namespace qsvt
