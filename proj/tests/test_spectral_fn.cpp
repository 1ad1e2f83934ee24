#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

#include "qsvt/spectral_fn.hpp"

using namespace qsvt;

namespace {

// Central finite differences against the registered derivative at
// log-spaced points of [lo, hi].
void check_derivative(const SpectralFunction& f, double lo, double hi) {
  for (int k = 0; k < 100; ++k) {
    const double x =
        lo * std::pow(hi / lo, (k + 0.5) / 100.0);
    const double d = 1e-6 * x;
    const double fd = (f(x + d) - f(x - d)) / (2.0 * d);
    CHECK(std::abs(f.deriv(x) - fd) <=
          1e-6 * std::max(1.0, std::abs(f.deriv(x))));
  }
}

}  // namespace

TEST_CASE("built-ins: values, f(0)=0, and analytic derivatives") {
  const SpectralFunction id = SpectralFunction::identity();
  const SpectralFunction inv = SpectralFunction::inverse();
  const SpectralFunction sq = SpectralFunction::power(2.0);
  const SpectralFunction th = SpectralFunction::threshold(0.5);

  CHECK(id(0.0) == 0.0);
  CHECK(inv(0.0) == 0.0);
  CHECK(sq(0.0) == 0.0);
  CHECK(th(0.0) == 0.0);

  CHECK(id(2.0) == 2.0);
  CHECK(inv(2.0) == doctest::Approx(0.5));
  CHECK(sq(3.0) == doctest::Approx(9.0));
  CHECK(th(0.4) == 0.0);
  CHECK(th(0.6) == doctest::Approx(0.6));

  check_derivative(id, 0.1, 10.0);
  check_derivative(inv, 0.1, 10.0);
  check_derivative(sq, 0.1, 10.0);
  check_derivative(SpectralFunction::power(0.5), 0.1, 10.0);

  CHECK_THROWS_AS(SpectralFunction::power(0.0), std::invalid_argument);
  CHECK_THROWS_AS(SpectralFunction::threshold(-1.0), std::invalid_argument);
}

TEST_CASE("spectrum summary from a spectrum") {
  const SpectrumSummary s = SpectrumSummary::from_spectrum({1.0, 0.5, 0.25});
  CHECK(s.sigma_max == doctest::Approx(1.0));
  CHECK(s.sigma_min == doctest::Approx(0.25));
  CHECK(s.kappa2 == doctest::Approx(4.0));
  CHECK(s.frob == doctest::Approx(std::sqrt(1.0 + 0.25 + 0.0625)));
  s.validate();
  CHECK_THROWS_AS(SpectrumSummary::from_spectrum({}), std::invalid_argument);
  SpectrumSummary bad = s;
  bad.frob = 0.5;  // below sigma_max
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("singular-value bracket L and its square Q") {
  SpectrumSummary s;
  s.sigma_max = 1.0;
  s.sigma_min = 1.0;
  s.kappa2 = 1.0;
  s.frob = 1.0;
  auto [L, Q] = intervals(s);
  CHECK(L.lo == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(L.hi == doctest::Approx(std::sqrt(1.5)));
  CHECK(Q.lo == doctest::Approx(L.lo * L.lo));
  CHECK(Q.hi == doctest::Approx(L.hi * L.hi));

  s.sigma_min = 0.5;
  s.kappa2 = 2.0;
  s.frob = 1.2;
  auto [L2, Q2] = intervals(s);
  CHECK(L2.lo == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))));
  CHECK(L2.hi == doctest::Approx(3.0 / (2.0 * std::sqrt(2.0))));
  CHECK(Q2.hi == doctest::Approx(L2.hi * L2.hi));
}

TEST_CASE("closed-form extrema over L") {
  const Interval L{0.5, 1.5};

  const SpectralBounds id = bounds_over_L(SpectralFunction::identity(), L);
  CHECK(id.Omega == doctest::Approx(1.5));
  CHECK(id.phi == doctest::Approx(1.0));
  CHECK(id.omega == doctest::Approx(0.5));
  CHECK(id.method == BoundsMethod::ClosedForm);

  const SpectralBounds inv = bounds_over_L(SpectralFunction::inverse(), L);
  CHECK(inv.Omega == doctest::Approx(2.0));
  CHECK(inv.phi == doctest::Approx(4.0));
  CHECK(inv.omega == doctest::Approx(2.0 / 3.0));

  const SpectralBounds sq = bounds_over_L(SpectralFunction::power(2.0), L);
  CHECK(sq.Omega == doctest::Approx(2.25));
  CHECK(sq.phi == doctest::Approx(3.0));
  CHECK(sq.omega == doctest::Approx(0.25));

  CHECK_THROWS_AS(bounds_over_L(SpectralFunction::identity(), Interval{0, 1}),
                  std::invalid_argument);
}

TEST_CASE("threshold admitted only with sigma0 outside the interior of L") {
  const Interval L{0.5, 1.5};
  CHECK_THROWS_AS(bounds_over_L(SpectralFunction::threshold(1.0), L),
                  std::domain_error);
  const SpectralBounds below = bounds_over_L(SpectralFunction::threshold(0.4), L);
  CHECK(below.Omega == doctest::Approx(1.5));
  CHECK(below.omega == doctest::Approx(0.5));
  const SpectralBounds above = bounds_over_L(SpectralFunction::threshold(2.0), L);
  CHECK(above.Omega == 0.0);
  CHECK(above.omega == 0.0);
}

TEST_CASE("table functions: interpolation, grid extrema, CSV ingestion") {
  // Piecewise-linear approximation of x^2 on [0, 2].
  std::vector<double> x, f, fp;
  for (int k = 0; k <= 400; ++k) {
    const double v = 2.0 * k / 400.0;
    x.push_back(v);
    f.push_back(v * v);
    fp.push_back(2.0 * v);
  }
  const SpectralFunction tab = SpectralFunction::table(x, f, fp);
  CHECK(tab(0.0) == 0.0);
  CHECK(tab(1.0) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(tab.deriv(1.0) == doctest::Approx(2.0).epsilon(1e-4));

  const SpectralBounds b = bounds_over_L(tab, Interval{0.5, 1.5});
  CHECK(b.method == BoundsMethod::Grid);
  // Grid extrema carry the 1.05 safety inflation.
  CHECK(b.Omega == doctest::Approx(2.25 * 1.05).epsilon(1e-3));
  CHECK(b.phi == doctest::Approx(3.0 * 1.05).epsilon(1e-3));
  CHECK(b.omega == doctest::Approx(0.25 / 1.05).epsilon(1e-3));

  CHECK_THROWS_AS(SpectralFunction::table({0.0}, {0.0}, {1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SpectralFunction::table({0.0, 0.0}, {0.0, 0.0}, {1.0, 1.0}),
                  std::invalid_argument);

  const std::string path = "table_fn_test.csv";
  {
    std::ofstream out(path);
    out << "x,f,fprime\n";
    for (std::size_t k = 0; k < x.size(); ++k)
      out << x[k] << ',' << f[k] << ',' << fp[k] << '\n';
  }
  const SpectralFunction from_csv = SpectralFunction::table_from_csv(path);
  CHECK(from_csv(1.3) == doctest::Approx(tab(1.3)));
  std::remove(path.c_str());
  CHECK_THROWS_AS(SpectralFunction::table_from_csv("missing_table.csv"),
                  std::runtime_error);
}

TEST_CASE("induced function h(s) = f(sqrt(s))/sqrt(s)") {
  const SpectralFunction h_id = h_of(SpectralFunction::identity());
  CHECK(h_id(0.0) == 0.0);
  CHECK(h_id(0.3) == doctest::Approx(1.0));
  CHECK(h_id(4.0) == doctest::Approx(1.0));

  const SpectralFunction h_sq = h_of(SpectralFunction::power(2.0));
  CHECK(h_sq(4.0) == doctest::Approx(2.0));
  CHECK(h_sq(0.25) == doctest::Approx(0.5));

  const SpectralFunction h_inv = h_of(SpectralFunction::inverse());
  CHECK(h_inv(2.0) == doctest::Approx(0.5));

  // Derivative consistency of the induced function, by finite differences.
  for (double s : {0.5, 1.0, 2.0, 3.7}) {
    const double d = 1e-6 * s;
    const double fd = (h_sq(s + d) - h_sq(s - d)) / (2.0 * d);
    CHECK(h_sq.deriv(s) == doctest::Approx(fd).epsilon(1e-5));
  }
}

TEST_CASE("positivity probe for the sampler path") {
  CHECK(SpectralFunction::identity().positive_on(0.1, 2.0));
  CHECK_FALSE(SpectralFunction::threshold(1.0).positive_on(0.1, 2.0));
}
