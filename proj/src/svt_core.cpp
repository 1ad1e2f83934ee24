#include "qsvt/svt_core.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qsvt {

DenseMatrix SmallSVD::reconstruct() const {
  if (rank() == 0) return DenseMatrix::Zero(U.rows(), V.rows());
  return U * sigma.asDiagonal() * V.adjoint();
}

double default_tau(const DenseMatrix& W) {
  if (W.size() == 0) return 0.0;
  const double smax = singular_values(W)(0);
  return static_cast<double>(std::max(W.rows(), W.cols())) *
         std::numeric_limits<double>::epsilon() * smax;
}

namespace {

void check_finite(const DenseMatrix& W, const char* who) {
  if (!W.allFinite())
    throw std::invalid_argument(std::string(who) + ": non-finite entries");
}

// zgesdd on a column-major copy. jobz: 'S' for thin factors, 'N' for values.
void lapack_svd(const DenseMatrix& W, Eigen::VectorXd& s, DenseMatrix* u,
                DenseMatrix* vt) {
  const lapack_int m = static_cast<lapack_int>(W.rows());
  const lapack_int n = static_cast<lapack_int>(W.cols());
  const lapack_int k = std::min(m, n);
  DenseMatrix a = W;  // overwritten by LAPACK
  s.resize(k);
  lapack_int info;
  if (u != nullptr) {
    u->resize(m, k);
    vt->resize(k, n);
    info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'S', m, n, a.data(), m, s.data(),
                          u->data(), m, vt->data(), k);
  } else {
    info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', m, n, a.data(), m, s.data(),
                          nullptr, m, nullptr, k);
  }
  if (info != 0) throw std::runtime_error("zgesdd failed, info=" + std::to_string(info));
}

}  // namespace

Eigen::VectorXd singular_values(const DenseMatrix& M) {
  check_finite(M, "singular_values");
  if (M.size() == 0) return Eigen::VectorXd();
  Eigen::VectorXd s;
  lapack_svd(M, s, nullptr, nullptr);
  return s;
}

double spectral_norm(const DenseMatrix& M) {
  if (M.size() == 0) return 0.0;
  return singular_values(M)(0);
}

SmallSVD svd(const DenseMatrix& W, double tau) {
  check_finite(W, "svd");
  SmallSVD out;
  if (W.size() == 0 || W.norm() == 0.0) {
    out.U = DenseMatrix::Zero(W.rows(), 0);
    out.V = DenseMatrix::Zero(W.cols(), 0);
    out.sigma = Eigen::VectorXd();
    out.tau = std::max(tau, 0.0);
    return out;
  }
  Eigen::VectorXd s;
  DenseMatrix u, vt;
  lapack_svd(W, s, &u, &vt);
  if (tau < 0.0)
    tau = static_cast<double>(std::max(W.rows(), W.cols())) *
          std::numeric_limits<double>::epsilon() * s(0);
  Eigen::Index k = 0;
  while (k < s.size() && s(k) > tau) ++k;
  out.U = u.leftCols(k);
  out.sigma = s.head(k);
  out.V = vt.topRows(k).adjoint();
  out.tau = tau;
  return out;
}

namespace {

Eigen::VectorXd apply_fn(const Eigen::VectorXd& sigma, const SpectralFunction& f) {
  Eigen::VectorXd out(sigma.size());
  for (Eigen::Index i = 0; i < sigma.size(); ++i) out(i) = f(sigma(i));
  return out;
}

}  // namespace

DenseMatrix phi(const SmallSVD& m_svd, const SpectralFunction& f) {
  if (m_svd.rank() == 0) return DenseMatrix::Zero(m_svd.U.rows(), m_svd.V.rows());
  return m_svd.U * apply_fn(m_svd.sigma, f).asDiagonal() * m_svd.V.adjoint();
}

DenseMatrix phi_adjoint(const SmallSVD& m_svd, const SpectralFunction& f) {
  if (m_svd.rank() == 0) return DenseMatrix::Zero(m_svd.V.rows(), m_svd.U.rows());
  return m_svd.V * apply_fn(m_svd.sigma, f).asDiagonal() * m_svd.U.adjoint();
}

MidMatrix mid_matrix(const SmallSVD& w_svd, const SpectralFunction& f) {
  const Eigen::Index r = w_svd.U.rows();
  if (w_svd.rank() == 0) return {DenseMatrix::Zero(r, r)};
  Eigen::VectorXd d(w_svd.rank());
  for (Eigen::Index i = 0; i < w_svd.rank(); ++i) {
    const double s = w_svd.sigma(i);
    d(i) = f(s) / (s * s * s);
  }
  return {w_svd.U * d.asDiagonal() * w_svd.U.adjoint()};
}

DenseMatrix p_reference(const DenseMatrix& s_dense, const SpectralFunction& f,
                        double tau) {
  return mid_matrix(svd(s_dense, tau), f).P;
}

}  // namespace qsvt
