#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qsvt/instance.hpp"
#include "qsvt/oracle.hpp"

using namespace qsvt;

namespace {

DenseMatrix random_dense(std::size_t m, std::size_t n, RngStream& rng) {
  DenseMatrix M(m, n);
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j)
      M(i, j) = Complex{rng.normal(), rng.normal()};
  return M;
}

}  // namespace

TEST_CASE("exact transform application: identity and hand instance") {
  RngStream rng(51);
  const DenseMatrix A = random_dense(8, 6, rng);
  const DenseVector b = random_unit_vector(8, rng);
  CHECK((exact_svt_apply(A, SpectralFunction::identity(), b) -
         A.adjoint() * b)
            .norm() <= 1e-12 * b.norm() * A.norm());

  DenseMatrix D = DenseMatrix::Zero(2, 2);
  D(0, 0) = 2.0;
  D(1, 1) = 1.0;
  DenseVector ones(2);
  ones << Complex{1, 0}, Complex{1, 0};
  const DenseVector out = exact_svt_apply(D, SpectralFunction::power(2.0), ones);
  CHECK(std::abs(out(0) - Complex{4, 0}) <= 1e-12);
  CHECK(std::abs(out(1) - Complex{1, 0}) <= 1e-12);

  CHECK_THROWS_AS(exact_svt_apply(A, SpectralFunction::identity(),
                                  DenseVector::Ones(5)),
                  std::invalid_argument);
}

TEST_CASE("inverse transform solves through the pseudo-inverse relations") {
  RngStream rng(52);
  const DenseMatrix A = synthesize_matrix(10, 7, {1.0, 0.5, 0.25}, rng);
  const DenseVector b = random_unit_vector(10, rng);
  // x = Phi_inv(A^*) b = A^+ b, so A x is the column-space projection of b.
  const DenseVector x = exact_svt_apply(A, SpectralFunction::inverse(), b);
  const SmallSVD s = svd(A);
  const DenseVector proj = s.U * (s.U.adjoint() * b);
  CHECK((A * x - proj).norm() <= 1e-9);
}

TEST_CASE("transform output is invariant under the degenerate-subspace gauge") {
  RngStream rng(53);
  // Repeated singular value 1.0 on a 2-dimensional subspace.
  const std::size_t m = 8, n = 6;
  const DenseMatrix U = random_orthonormal(m, 3, rng);
  const DenseMatrix V = random_orthonormal(n, 3, rng);
  Eigen::Vector3d sig(1.0, 1.0, 0.5);
  const DenseMatrix A = U * sig.asDiagonal() * V.adjoint();

  // Rotate the degenerate block: same matrix, different factors.
  DenseMatrix R = DenseMatrix::Identity(3, 3);
  const double ang = 0.7;
  R(0, 0) = std::cos(ang);
  R(0, 1) = -std::sin(ang);
  R(1, 0) = std::sin(ang);
  R(1, 1) = std::cos(ang);
  const DenseMatrix U2 = U * R;
  const DenseMatrix V2 = V * R;
  CHECK((U2 * sig.asDiagonal() * V2.adjoint() - A).norm() <= 1e-12);

  const DenseVector b = random_unit_vector(m, rng);
  const SpectralFunction f = SpectralFunction::power(2.0);
  Eigen::Vector3d fs(f(1.0), f(1.0), f(0.5));
  const DenseVector via_first = V * fs.asDiagonal() * U.adjoint() * b;
  const DenseVector via_second = V2 * fs.asDiagonal() * U2.adjoint() * b;
  const DenseVector via_svd = exact_svt_apply(A, f, b);
  CHECK((via_first - via_second).norm() <= 1e-9);
  CHECK((via_svd - via_first).norm() <= 1e-9);
}

TEST_CASE("distributions and total variation") {
  DenseVector v(2);
  v << Complex{3, 0}, Complex{4, 0};
  const Eigen::VectorXd p = exact_distribution(v);
  CHECK(p(0) == doctest::Approx(0.36));
  CHECK(p(1) == doctest::Approx(0.64));
  CHECK_THROWS_AS(exact_distribution(DenseVector::Zero(3)), std::domain_error);

  CHECK(tv_distance(p, p) == 0.0);
  Eigen::VectorXd e1(2), e2(2);
  e1 << 1.0, 0.0;
  e2 << 0.0, 1.0;
  CHECK(tv_distance(e1, e2) == doctest::Approx(1.0));
  Eigen::VectorXd bad(2);
  bad << 0.7, 0.7;
  CHECK_THROWS_AS(tv_distance(e1, bad), std::invalid_argument);
  CHECK_THROWS_AS(tv_distance(e1, Eigen::VectorXd::Ones(3)),
                  std::invalid_argument);
}

TEST_CASE("vector perturbation bound on distributions") {
  RngStream rng(54);
  DenseVector v = 3.0 * random_unit_vector(6, rng);
  CHECK(check_tv_vector_bound(v, v).lhs == 0.0);
  CHECK(check_tv_vector_bound(v, v).pass);

  const BoundCheck flip = check_tv_vector_bound(v, -v);
  CHECK(flip.lhs == doctest::Approx(0.0));
  CHECK(flip.rhs == doctest::Approx(4.0));
  CHECK(flip.pass);

  const BoundCheck zero = check_tv_vector_bound(v, DenseVector::Zero(6));
  CHECK(zero.pass);

  for (int k = 0; k < 1000; ++k) {
    const DenseVector a = random_unit_vector(6, rng);
    DenseVector w = a + 0.5 * random_unit_vector(6, rng);
    if (w.norm() == 0.0) continue;
    CHECK(check_tv_vector_bound(a, w).pass);
  }
}

TEST_CASE("inequality checkers hold on random inputs") {
  RngStream rng(55);
  const SpectralFunction fns[] = {SpectralFunction::identity(),
                                  SpectralFunction::inverse(),
                                  SpectralFunction::power(2.0)};
  for (int k = 0; k < 30; ++k) {
    const DenseMatrix M = random_dense(7, 5, rng);
    const DenseMatrix N = M + 0.3 * random_dense(7, 5, rng);
    CHECK(check_weyl(M, N).pass);
    CHECK(check_weyl(M, M).lhs == 0.0);

    const DenseVector v = random_unit_vector(5, rng);
    for (const BoundCheck& c : check_norm_inequalities(M, N.adjoint(), v))
      CHECK(c.pass);

    const DenseMatrix X = M * M.adjoint();
    const DenseMatrix Y = N * N.adjoint();
    const BoundCheck psd = check_fpsd(X, Y, fns[k % 3]);
    CHECK(psd.pass);
    CHECK(check_fpsd(X, X, fns[k % 3]).lhs <= 1e-9);
  }
}

TEST_CASE("FKV checker evaluates both sides") {
  RngStream rng(56);
  const DenseMatrix A = random_dense(6, 5, rng);
  // S = A trivially satisfies the Gram bound for any positive beta.
  CHECK(check_fkv(A, A, 0.01).pass);
  const BoundCheck c = check_fkv(A, 0.5 * A, 0.1);
  CHECK(c.lhs == doctest::Approx(
                     (A.adjoint() * A * 0.75).norm()));
  CHECK(c.rhs == doctest::Approx(0.1 * A.squaredNorm()));
  CHECK_THROWS_AS(check_fkv(A, random_dense(6, 4, rng), 0.1),
                  std::invalid_argument);
}
