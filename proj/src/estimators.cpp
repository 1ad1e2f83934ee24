#include "qsvt/estimators.hpp"

#include <sstream>
#include <stdexcept>

namespace qsvt {

BilinearEstimate estimate_bilinear(const DenseVector& v, const SampledMatrix& M,
                                   const DenseVector& w, double eps,
                                   double delta, RngStream& rng) {
  if (static_cast<std::size_t>(v.size()) != M.rows() ||
      static_cast<std::size_t>(w.size()) != M.cols())
    throw std::invalid_argument("estimate_bilinear: dimension mismatch");
  return estimate_bilinear(
      [&v](std::size_t i) { return v(static_cast<Eigen::Index>(i)); }, v.norm(),
      M, [&w](std::size_t j) { return w(static_cast<Eigen::Index>(j)); },
      w.norm(), eps, delta, rng);
}

LinCombSample sample_linear_combination(const RowSketch& rs,
                                        const DenseVector& y, RngStream& rng,
                                        std::uint64_t max_iter) {
  if (static_cast<std::size_t>(y.size()) != rs.r)
    throw std::invalid_argument(
        "sample_linear_combination: y length must equal sketch size");
  const double y_sq = y.squaredNorm();
  if (!(y_sq > 0.0))
    throw std::domain_error("sample_linear_combination: zero combination");

  // Cumulative weights of |y_t|^2 for the proposal over sketch rows.
  std::vector<double> cum(rs.r);
  double acc = 0.0;
  for (std::size_t t = 0; t < rs.r; ++t) {
    acc += std::norm(y(static_cast<Eigen::Index>(t)));
    cum[t] = acc;
  }

  LinCombSample out;
  for (out.iterations = 1; out.iterations <= max_iter; ++out.iterations) {
    const double u = rng.uniform() * acc;
    const std::size_t t = static_cast<std::size_t>(
        std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
    const std::size_t ts = std::min(t, rs.r - 1);
    const std::size_t i =
        rs.source->sample_in_row(rs.row_indices[ts], rng);

    // Accept with |(S^* y)_i|^2 / (r sum_t |y_t S_(t,i)|^2); the ratio is
    // in [0,1] by Cauchy-Schwarz since every |S_(t,i)| <= max_t |S_(t,i)|.
    const DenseVector col = s_column(rs, i);
    const double num = std::norm(col.dot(y));
    double denom = 0.0;
    for (std::size_t s = 0; s < rs.r; ++s)
      denom += std::norm(y(static_cast<Eigen::Index>(s))) *
               std::norm(col(static_cast<Eigen::Index>(s)));
    denom *= static_cast<double>(rs.r);
    if (denom > 0.0 && rng.uniform() * denom < num) {
      out.index = i;
      return out;
    }
  }
  std::ostringstream msg;
  msg << "degenerate combination: no acceptance in " << max_iter
      << " proposals (acceptance rate < " << 1.0 / static_cast<double>(max_iter)
      << ")";
  throw std::runtime_error(msg.str());
}

}  // namespace qsvt
