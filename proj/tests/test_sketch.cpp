#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qsvt/instance.hpp"
#include "qsvt/oracle.hpp"
#include "qsvt/sketch.hpp"

using namespace qsvt;

TEST_CASE("row sketch of a single-nonzero-row matrix hits that row") {
  using T = SampledMatrix::Triplet;
  SampledMatrix A = SampledMatrix::build(
      5, 4, {T{3, 0, {1, 0}}, T{3, 2, {0, 2}}});
  RngStream rng(1);
  const RowSketch rs = sample_rows(A, 6, rng);
  CHECK(rs.r == 6);
  for (std::size_t idx : rs.row_indices) CHECK(idx == 3);
  // Every sketch row has norm ||A||_F / sqrt(r).
  CHECK(rs.row_norm() == doctest::Approx(std::sqrt(5.0 / 6.0)));
}

TEST_CASE("r = 1: the sketch is one rescaled row of norm ||A||_F") {
  RngStream rng(2);
  const DenseMatrix A = synthesize_matrix(6, 5, {1.0, 0.5}, rng);
  const SampledMatrix As = dense_to_sampled(A);
  RngStream srng(3);
  const RowSketch rs = sample_rows(As, 1, srng);
  const DenseMatrix S = materialize_s(rs);
  CHECK(S.rows() == 1);
  CHECK(S.norm() == doctest::Approx(A.norm()).epsilon(1e-12));
}

TEST_CASE("zero matrix has no row distribution") {
  SampledMatrix Z(3, 3);
  RngStream rng(4);
  CHECK_THROWS_AS(sample_rows(Z, 2, rng), std::domain_error);
  SampledMatrix A(2, 2);
  A.update(0, 0, {1, 0});
  CHECK_THROWS_AS(sample_rows(A, 0, rng), std::invalid_argument);
}

TEST_CASE("implicit sketch invariants: ||S||_F = ||A||_F, rows rescaled") {
  RngStream rng(5);
  const DenseMatrix A = synthesize_matrix(20, 15, {1.0, 0.7, 0.4}, rng);
  const SampledMatrix As = dense_to_sampled(A);
  RngStream srng(6);
  const RowSketch rs = sample_rows(As, 30, srng);
  const DenseMatrix S = materialize_s(rs);
  CHECK(S.norm() == doctest::Approx(A.norm()).epsilon(1e-12));
  for (std::size_t s = 0; s < rs.r; ++s) {
    const DenseVector expect =
        rs.row_scales[s] *
        A.row(static_cast<Eigen::Index>(rs.row_indices[s])).transpose();
    CHECK((S.row(static_cast<Eigen::Index>(s)).transpose() - expect).norm() <=
          1e-12);
  }
}

TEST_CASE("s_column matches the dense materialization; zero column is zero") {
  RngStream rng(7);
  DenseMatrix A = synthesize_matrix(12, 10, {1.0, 0.6}, rng);
  A.col(4).setZero();
  const SampledMatrix As = dense_to_sampled(A);
  RngStream srng(8);
  const RowSketch rs = sample_rows(As, 9, srng);
  const DenseMatrix S = materialize_s(rs);
  for (std::size_t j = 0; j < 10; ++j)
    CHECK((s_column(rs, j) - S.col(static_cast<Eigen::Index>(j))).norm() <=
          1e-12);
  CHECK(s_column(rs, 4).norm() == 0.0);
  CHECK_THROWS_AS(s_column(rs, 10), std::out_of_range);
}

TEST_CASE("column sketch of a 2x2 equal-modulus matrix") {
  using T = SampledMatrix::Triplet;
  const double a = 0.7;
  SampledMatrix A = SampledMatrix::build(
      2, 2,
      {T{0, 0, {a, 0}}, T{0, 1, {0, -a}}, T{1, 0, {-a, 0}}, T{1, 1, {0, a}}});
  RngStream rng(9);
  const RowSketch rs = sample_rows(A, 2, rng);
  const WSketch ws = sample_columns(A, rs, 2, rng);
  // ||A||_F = 2a; step-5 arithmetic gives every W entry modulus ||A||_F/2.
  for (Eigen::Index s = 0; s < 2; ++s)
    for (Eigen::Index t = 0; t < 2; ++t)
      CHECK(std::abs(ws.W(s, t)) == doctest::Approx(a).epsilon(1e-12));
}

TEST_CASE("||W||_F = ||A||_F and W columns are rescaled S columns") {
  RngStream rng(10);
  const DenseMatrix A = synthesize_matrix(18, 14, {1.0, 0.8, 0.5, 0.3}, rng);
  const SampledMatrix As = dense_to_sampled(A);
  RngStream srng(11);
  const RowSketch rs = sample_rows(As, 25, srng);
  const WSketch ws = sample_columns(As, rs, 20, srng);
  CHECK(ws.W.norm() == doctest::Approx(A.norm()).epsilon(1e-10));
  for (std::size_t t = 0; t < ws.c; ++t) {
    const DenseVector col = s_column(rs, ws.col_indices[t]);
    CHECK((ws.W.col(static_cast<Eigen::Index>(t)) - ws.col_scales[t] * col)
              .norm() <= 1e-12);
  }
  CHECK_THROWS_AS(sample_columns(As, rs, 0, srng), std::invalid_argument);
}

TEST_CASE("column sketch of a diagonal matrix only picks sampled diagonals") {
  using T = SampledMatrix::Triplet;
  SampledMatrix A = SampledMatrix::build(
      4, 4, {T{0, 0, {1, 0}}, T{1, 1, {2, 0}}, T{2, 2, {1, 0}}, T{3, 3, {1, 0}}});
  RngStream rng(12);
  const RowSketch rs = sample_rows(A, 3, rng);
  const WSketch ws = sample_columns(A, rs, 5, rng);
  for (std::size_t t = 0; t < ws.c; ++t) {
    bool owned = false;
    for (std::size_t s = 0; s < rs.r; ++s)
      owned = owned || (rs.row_indices[s] == ws.col_indices[t]);
    CHECK(owned);
  }
}

TEST_CASE("FKV concentration at a small scale") {
  RngStream rng(13);
  const DenseMatrix A =
      synthesize_matrix(40, 30, {1.0, 0.8, 0.6, 0.45, 0.3}, rng);
  const SampledMatrix As = dense_to_sampled(A);
  const double beta = 0.5, eta = 0.3;
  const auto q =
      static_cast<std::size_t>(std::ceil(3.0 / (eta * beta * beta)));
  int hits = 0;
  for (std::size_t trial = 0; trial < 10; ++trial) {
    RngStream srng(14, stream::kTrial, trial);
    const RowSketch rs = sample_rows(As, q, srng);
    if (check_fkv(A, materialize_s(rs), beta).pass) ++hits;
  }
  CHECK(hits >= 7);  // expected >= 1 - eta
}
