#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "qsvt/sampled_matrix.hpp"
#include "qsvt/sketch.hpp"

namespace qsvt {

struct BilinearEstimate {
  Complex value{0.0, 0.0};
  double epsilon = 0;
  double delta = 0;
  std::uint64_t samples_used = 0;
};

/// Monte-Carlo estimate of v^* M w with additive error eps (probability
/// >= 1 - delta). Draws (i,j) with probability |M_(i,j)|^2/||M||_F^2; the
/// single-sample estimator conj(v_i) M_(i,j) w_j ||M||_F^2 / |M_(i,j)|^2
/// is unbiased with variance <= ||v||^2 ||w||^2 ||M||_F^2. Group means of
/// ceil(6 var_bound / eps^2) draws are combined by a coordinatewise
/// median over ceil(8 ln(2/delta)) groups, so samples_used never exceeds
/// the product of the two counts.
///
/// v and w must be evaluable at arbitrary indices in O(1); their norms are
/// supplied by the caller. Zero norms short-circuit to 0 with no samples.
template <class VFn, class WFn>
BilinearEstimate estimate_bilinear(VFn&& v, double v_norm,
                                   const SampledMatrix& M, WFn&& w,
                                   double w_norm, double eps, double delta,
                                   RngStream& rng) {
  if (!(eps > 0.0)) throw std::invalid_argument("estimate_bilinear: eps <= 0");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("estimate_bilinear: delta outside (0,1)");
  BilinearEstimate out;
  out.epsilon = eps;
  out.delta = delta;
  const double fro_sq = M.frobenius_sq();
  if (v_norm == 0.0 || w_norm == 0.0 || fro_sq == 0.0) return out;

  const double var_bound = v_norm * v_norm * w_norm * w_norm * fro_sq;
  const auto group = static_cast<std::uint64_t>(
      std::ceil(6.0 * var_bound / (eps * eps)));
  const auto groups = static_cast<std::uint64_t>(
      std::ceil(8.0 * std::log(2.0 / delta)));

  std::vector<double> re(groups), im(groups);
  for (std::uint64_t g = 0; g < groups; ++g) {
    Complex sum{0.0, 0.0};
    for (std::uint64_t s = 0; s < group; ++s) {
      const std::size_t i = M.sample_row(rng);
      const std::size_t j = M.sample_in_row(i, rng);
      const Complex a = M.query(i, j);
      sum += std::conj(v(i)) * a * w(j) * (fro_sq / std::norm(a));
    }
    re[g] = sum.real() / static_cast<double>(group);
    im[g] = sum.imag() / static_cast<double>(group);
  }
  const auto median = [](std::vector<double>& xs) {
    const std::size_t mid = xs.size() / 2;
    std::nth_element(xs.begin(), xs.begin() + mid, xs.end());
    double hi = xs[mid];
    if (xs.size() % 2 == 0) {
      const double lo = *std::max_element(xs.begin(), xs.begin() + mid);
      return 0.5 * (lo + hi);
    }
    return hi;
  };
  out.value = Complex{median(re), median(im)};
  out.samples_used = group * groups;
  return out;
}

/// Dense-vector convenience overload.
BilinearEstimate estimate_bilinear(const DenseVector& v, const SampledMatrix& M,
                                   const DenseVector& w, double eps,
                                   double delta, RngStream& rng);

struct LinCombSample {
  std::size_t index = 0;
  std::uint64_t iterations = 0;
};

/// Rejection-sample an index i in [n] with probability
/// |(S^* y)_i|^2 / ||S^* y||^2, exactly, using only sampling access to A.
/// All columns of S^* share norm ||A||_F/sqrt(r), so a proposal picks
/// t in [r] with probability |y_t|^2/||y||^2, samples i inside source row
/// p_t, and accepts with probability
/// |(S^* y)_i|^2 / (r sum_t |y_t S^*_(i,t)|^2), valid by Cauchy-Schwarz.
/// Expected iterations: r C(S^*, y) = ||y||^2 ||A||_F^2 / ||S^* y||^2.
/// Throws std::runtime_error("degenerate combination ...") when max_iter
/// proposals pass without an acceptance.
LinCombSample sample_linear_combination(const RowSketch& rs,
                                        const DenseVector& y, RngStream& rng,
                                        std::uint64_t max_iter = 1000000);

}  // namespace qsvt
