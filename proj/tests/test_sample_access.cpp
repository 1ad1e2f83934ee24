#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "qsvt/oracle.hpp"
#include "qsvt/sampled_matrix.hpp"

using namespace qsvt;

TEST_CASE("weight tree: totals, leaves, and sampling") {
  WeightTree t(5);
  CHECK(t.leaves() == 5);
  CHECK(t.total() == 0.0);
  CHECK_THROWS_AS(t.sample(0.5), std::domain_error);

  t.set(0, 1.0);
  t.set(3, 3.0);
  CHECK(t.total() == doctest::Approx(4.0));
  CHECK(t.leaf(0) == 1.0);
  CHECK(t.leaf(3) == 3.0);
  CHECK(t.leaf(1) == 0.0);

  // u below 1/4 of the mass lands on leaf 0, the rest on leaf 3.
  CHECK(t.sample(0.0) == 0);
  CHECK(t.sample(0.2) == 0);
  CHECK(t.sample(0.3) == 3);
  CHECK(t.sample(0.999) == 3);

  t.set(3, 0.0);
  CHECK(t.total() == doctest::Approx(1.0));
  CHECK(t.sample(0.999) == 0);

  t.rebuild();
  CHECK(t.total() == doctest::Approx(1.0));
}

TEST_CASE("weight tree: rejects negative weights and bad indices") {
  WeightTree t(4);
  CHECK_THROWS_AS(t.set(0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(t.set(4, 1.0), std::out_of_range);
}

TEST_CASE("vector sampler: set/get/erase and distribution") {
  VectorSampler v(8);
  v.set(2, Complex{3.0, 0.0});
  v.set(5, Complex{0.0, 4.0});
  CHECK(v.nnz() == 2);
  CHECK(v.get(2) == Complex{3.0, 0.0});
  CHECK(v.get(0) == Complex{0.0, 0.0});
  CHECK(v.norm_sq() == doctest::Approx(25.0));
  v.set(5, Complex{0.0, 0.0});
  CHECK(v.nnz() == 1);
  CHECK_FALSE(v.contains(5));
  CHECK_THROWS_AS(v.get(8), std::out_of_range);
}

TEST_CASE("build rejects duplicates and out-of-range entries by coordinate") {
  using T = SampledMatrix::Triplet;
  CHECK_THROWS_WITH_AS(
      SampledMatrix::build(2, 2, {T{0, 0, {1, 0}}, T{0, 0, {2, 0}}}),
      doctest::Contains("duplicate entry (0,0)"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(SampledMatrix::build(2, 2, {T{2, 0, {1, 0}}}),
                       doctest::Contains("(2,0)"), std::out_of_range);
  CHECK_THROWS_AS(SampledMatrix(0, 3), std::invalid_argument);
}

TEST_CASE("single nonzero row dominates row sampling; one-hot row is constant") {
  using T = SampledMatrix::Triplet;
  SampledMatrix M = SampledMatrix::build(
      4, 3, {T{2, 0, {1, 0}}, T{2, 1, {0, -2}}, T{2, 2, {2, 1}}});
  RngStream rng(7);
  for (int k = 0; k < 200; ++k) CHECK(M.sample_row(rng) == 2);

  SampledMatrix one = SampledMatrix::build(2, 5, {T{1, 3, {0.5, 0.5}}});
  for (int k = 0; k < 200; ++k) CHECK(one.sample_in_row(1, rng) == 3);
  CHECK_THROWS_AS(one.sample_in_row(0, rng), std::domain_error);
}

TEST_CASE("frobenius and row norms track a dense mirror through updates") {
  const std::size_t m = 24, n = 17;
  SampledMatrix M(m, n);
  std::vector<std::vector<Complex>> mirror(m, std::vector<Complex>(n));
  RngStream rng(11);
  for (int k = 0; k < 20000; ++k) {
    const std::size_t i = rng.uniform_int(m);
    const std::size_t j = rng.uniform_int(n);
    // Mix writes and explicit zeroings.
    const Complex v = (k % 7 == 0) ? Complex{0.0, 0.0}
                                   : Complex{rng.normal(), rng.normal()};
    M.update(i, j, v);
    mirror[i][j] = v;
  }
  double fro = 0.0;
  for (const auto& row : mirror)
    for (const Complex& v : row) fro += std::norm(v);
  CHECK(M.frobenius_sq() == doctest::Approx(fro).epsilon(1e-9));
  for (std::size_t i = 0; i < m; ++i) {
    double rn = 0.0;
    for (const Complex& v : mirror[i]) rn += std::norm(v);
    CHECK(M.row_norm_sq(i) == doctest::Approx(rn).epsilon(1e-9));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) CHECK(M.query(i, j) == mirror[i][j]);
}

TEST_CASE("row sampling matches the exact distribution at desk scale") {
  RngStream rng(3);
  const std::size_t m = 16, n = 16;
  SampledMatrix M(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      M.update(i, j, Complex{rng.normal(), rng.normal()});

  const std::size_t draws = 200000;
  std::vector<double> emp(m, 0.0);
  for (std::size_t d = 0; d < draws; ++d)
    emp[M.sample_row(rng)] += 1.0 / static_cast<double>(draws);
  double tv = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    tv += std::abs(emp[i] - M.row_norm_sq(i) / M.frobenius_sq());
  tv *= 0.5;
  CHECK(tv <= 3.0 * std::sqrt(static_cast<double>(m) / draws));
}

TEST_CASE("per-operation node visits respect the cost contract") {
  RngStream rng(5);
  const std::size_t m = 48, n = 33;  // non-powers of two
  SampledMatrix M(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      M.update(i, j, Complex{rng.normal(), 0.0});

  const auto log2ceil = [](std::size_t x) {
    std::size_t l = 0;
    while ((std::size_t{1} << l) < x) ++l;
    return l;
  };
  const std::uint64_t bound = 4 * (log2ceil(m) + log2ceil(n) + 2);

  for (int k = 0; k < 300; ++k) {
    M.reset_node_visits();
    const std::size_t i = M.sample_row(rng);
    M.sample_in_row(i, rng);
    CHECK(M.node_visits() <= bound);

    M.reset_node_visits();
    M.update(rng.uniform_int(m), rng.uniform_int(n),
             Complex{rng.normal(), rng.normal()});
    CHECK(M.node_visits() <= bound);
  }
}

TEST_CASE("vector_as_matrix stores a vector as a sampleable 1 x n row") {
  const std::vector<Complex> v{{1, 0}, {0, 0}, {0, 2}};
  SampledMatrix M = vector_as_matrix(v);
  CHECK(M.rows() == 1);
  CHECK(M.cols() == 3);
  CHECK(M.nnz() == 2);
  CHECK(M.frobenius_sq() == doctest::Approx(5.0));
  RngStream rng(1);
  for (int k = 0; k < 50; ++k) {
    const std::size_t j = M.sample_in_row(0, rng);
    CHECK((j == 0 || j == 2));
  }
}

TEST_CASE("entries come back sorted and round-trip through to_dense") {
  using T = SampledMatrix::Triplet;
  SampledMatrix M = SampledMatrix::build(
      3, 3, {T{2, 1, {1, 1}}, T{0, 2, {2, 0}}, T{2, 0, {0, 3}}});
  const auto ents = M.entries();
  REQUIRE(ents.size() == 3);
  CHECK(ents[0].i == 0);
  CHECK(ents[0].j == 2);
  CHECK(ents[1].i == 2);
  CHECK(ents[1].j == 0);
  CHECK(ents[2].i == 2);
  CHECK(ents[2].j == 1);
  const DenseMatrix D = to_dense(M);
  CHECK(D(2, 1) == Complex{1, 1});
  CHECK(D(0, 2) == Complex{2, 0});
  CHECK(D(1, 1) == Complex{0, 0});
}
