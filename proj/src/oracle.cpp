#include "qsvt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qsvt {

namespace {
constexpr double kSlack = 1e-9;
}

DenseMatrix to_dense(const SampledMatrix& M) {
  DenseMatrix out = DenseMatrix::Zero(M.rows(), M.cols());
  for (const auto& t : M.entries()) out(t.i, t.j) = t.value;
  return out;
}

DenseVector exact_svt_apply(const DenseMatrix& A, const SpectralFunction& f,
                            const DenseVector& b) {
  if (A.rows() != b.size())
    throw std::invalid_argument("exact_svt_apply: dimension mismatch");
  const SmallSVD s = svd(A);
  return phi_adjoint(s, f) * b;
}

Eigen::VectorXd exact_distribution(const DenseVector& v) {
  const double nsq = v.squaredNorm();
  if (!(nsq > 0.0)) throw std::domain_error("exact_distribution: zero vector");
  return v.cwiseAbs2().real() / nsq;
}

double tv_distance(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("tv_distance: length mismatch");
  if (std::abs(p.sum() - 1.0) > 1e-9 || std::abs(q.sum() - 1.0) > 1e-9)
    throw std::invalid_argument("tv_distance: inputs must sum to 1");
  return 0.5 * (p - q).cwiseAbs().sum();
}

BoundCheck check_tv_vector_bound(const DenseVector& v, const DenseVector& w) {
  const double nv = v.norm();
  if (!(nv > 0.0)) throw std::domain_error("check_tv_vector_bound: zero v");
  BoundCheck c;
  c.rhs = 2.0 * (v - w).norm() / nv;
  if (w.squaredNorm() == 0.0) {
    c.lhs = 1.0;  // TV against the zero vector is undefined; 2||v-w||/||v|| = 2
  } else {
    c.lhs = tv_distance(exact_distribution(v), exact_distribution(w));
  }
  c.pass = c.lhs <= c.rhs + 1e-12;
  return c;
}

BoundCheck check_weyl(const DenseMatrix& M, const DenseMatrix& N) {
  if (M.rows() != N.rows() || M.cols() != N.cols())
    throw std::invalid_argument("check_weyl: shape mismatch");
  const Eigen::VectorXd sm = singular_values(M);
  const Eigen::VectorXd sn = singular_values(N);
  BoundCheck c;
  for (Eigen::Index i = 0; i < sm.size(); ++i)
    c.lhs = std::max(c.lhs, std::abs(sm(i) - sn(i)));
  c.rhs = spectral_norm(M - N);
  c.pass = c.lhs <= c.rhs + kSlack;
  return c;
}

BoundCheck check_fkv(const DenseMatrix& A, const DenseMatrix& S, double beta) {
  if (A.cols() != S.cols())
    throw std::invalid_argument("check_fkv: column count mismatch");
  BoundCheck c;
  c.lhs = (A.adjoint() * A - S.adjoint() * S).norm();
  c.rhs = beta * A.squaredNorm();
  c.pass = c.lhs <= c.rhs + kSlack;
  return c;
}

BoundCheck check_fpsd(const DenseMatrix& X, const DenseMatrix& Y,
                      const SpectralFunction& g) {
  if (X.rows() != X.cols() || Y.rows() != Y.cols() || X.rows() != Y.rows())
    throw std::invalid_argument("check_fpsd: need square matrices of equal size");
  const Eigen::VectorXd sx = singular_values(X);
  const Eigen::VectorXd sy = singular_values(Y);
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& s : {sx, sy})
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (s(i) > 1e-12 * std::max(sx(0), sy(0))) {
        lo = std::min(lo, s(i));
        hi = std::max(hi, s(i));
      }
  BoundCheck c;
  c.lhs = (phi(svd(X), g) - phi(svd(Y), g)).norm();
  if (hi == 0.0) {  // both matrices are zero
    c.rhs = 0.0;
    c.pass = c.lhs <= kSlack;
    return c;
  }
  double factor = 0.0;
  const int n = 20000;
  for (int k = 0; k <= n; ++k) {
    const double s = lo + (hi - lo) * k / n;
    factor = std::max(factor, std::abs(g.deriv(s)) + std::abs(g(s) / s));
  }
  c.rhs = (X - Y).norm() * factor;
  c.pass = c.lhs <= c.rhs + kSlack;
  return c;
}

std::array<BoundCheck, 3> check_norm_inequalities(const DenseMatrix& M,
                                                  const DenseMatrix& N,
                                                  const DenseVector& v) {
  if (M.cols() != N.rows() || M.cols() != v.size())
    throw std::invalid_argument("check_norm_inequalities: shape mismatch");
  const double m2 = spectral_norm(M);
  const double n2 = spectral_norm(N);
  std::array<BoundCheck, 3> out;
  out[0] = {(M * v).norm(), m2 * v.norm(), false};
  out[1] = {(M * N).norm(), m2 * N.norm(), false};
  out[2] = {(M * N).norm(), M.norm() * n2, false};
  for (auto& c : out) c.pass = c.lhs <= c.rhs + kSlack;
  return out;
}

}  // namespace qsvt
