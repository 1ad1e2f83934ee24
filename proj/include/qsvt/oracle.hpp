#pragma once

#include <array>

#include "qsvt/sampled_matrix.hpp"
#include "qsvt/svt_core.hpp"

namespace qsvt {

/// Dense, exact reference computations grounding the probabilistic tests,
/// plus numeric checkers for the inequalities the analysis relies on.
/// Checkers report both sides so callers can log margins.

DenseMatrix to_dense(const SampledMatrix& M);

/// Phi_f(A^*) b = V f(Sigma) U^* b from the full SVD of A.
DenseVector exact_svt_apply(const DenseMatrix& A, const SpectralFunction& f,
                            const DenseVector& b);

/// P_v(i) = |v_i|^2 / ||v||^2. Throws on the zero vector.
Eigen::VectorXd exact_distribution(const DenseVector& v);

/// Total variation distance (1/2) sum |p_i - q_i|. Inputs must sum to 1
/// within 1e-9.
double tv_distance(const Eigen::VectorXd& p, const Eigen::VectorXd& q);

struct BoundCheck {
  double lhs = 0, rhs = 0;
  bool pass = false;
};

/// ||P_v - P_w||_TV <= 2 ||v - w|| / ||v||   (1e-12 slack).
BoundCheck check_tv_vector_bound(const DenseVector& v, const DenseVector& w);

/// Weyl: max_i |sigma_i(M) - sigma_i(N)| <= ||M - N||.
BoundCheck check_weyl(const DenseMatrix& M, const DenseMatrix& N);

/// FKV: ||A^*A - S^*S||_F <= beta ||A||_F^2.
BoundCheck check_fkv(const DenseMatrix& A, const DenseMatrix& S, double beta);

/// PSD transform bound: for PSD X, Y,
/// ||Phi_g(X) - Phi_g(Y)||_F <= ||X - Y||_F * max_S {|g'| + |g/s|},
/// with the max over Conv((s(X) u s(Y)) \ {0}) on a fine grid.
BoundCheck check_fpsd(const DenseMatrix& X, const DenseMatrix& Y,
                      const SpectralFunction& g);

/// The three standard norm inequalities:
/// ||Mv|| <= ||M|| ||v||, ||MN||_F <= ||M|| ||N||_F, ||MN||_F <= ||M||_F ||N||.
std::array<BoundCheck, 3> check_norm_inequalities(const DenseMatrix& M,
                                                  const DenseMatrix& N,
                                                  const DenseVector& v);

}  // namespace qsvt
