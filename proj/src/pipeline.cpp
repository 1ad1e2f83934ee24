#include "qsvt/pipeline.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qsvt {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// Denominators of the theta/gamma formulas:
// 2 ||A||_F^2 (kappa2^2/||A||) { phi + coef * sqrt(2) Omega kappa2/||A|| } ||b||
// with coef = 3 for theta, 7 for gamma.
double accuracy_denom(const SpectrumSummary& s, const SpectralBounds& b,
                      double norm_b, double coef) {
  const double brace =
      b.phi + coef * kSqrt2 * b.Omega * s.kappa2 / s.sigma_max;
  return 2.0 * s.frob * s.frob * (s.kappa2 * s.kappa2 / s.sigma_max) * brace *
         norm_b;
}

std::size_t size_from_accuracy(double eta, double acc) {
  const double v = std::ceil(3.0 / (eta * acc * acc));
  if (!(v > 0) || v > 9e18)
    throw std::invalid_argument("plan: sketch size overflows");
  return static_cast<std::size_t>(v);
}

void check_common(const SpectrumSummary& summary, double norm_b, double eta) {
  summary.validate();
  if (!(norm_b > 0.0)) throw std::invalid_argument("plan: ||b|| must be > 0");
  if (!(eta > 0.0 && eta < 1.0))
    throw std::invalid_argument("plan: eta outside (0,1)");
}

// Shared tail of the planners: estimator budget and failure split. The
// failure budget is spent as 2 eta/3 on the sketch events and eta/3 split
// evenly over the r bilinear estimates.
void finish_plan(PlanParameters& p) {
  const SpectrumSummary& s = p.summary;
  const double sig_ratio = s.sigma_max / s.kappa2;
  const double root = std::sqrt(static_cast<double>(p.r) *
                                (2.0 * s.kappa2 * s.kappa2 + 1.0));
  const double denom_coef = (p.target == PlanTarget::Coordinate) ? 4.0 : 8.0;
  const double numer = (p.target == PlanTarget::Coordinate)
                           ? p.eps_target
                           : p.eps_target * p.bounds.omega * p.alpha * p.norm_b;
  p.eps_inner = numer * sig_ratio * sig_ratio /
                (denom_coef * p.bounds.Omega * root);
  p.delta_inner = p.eta / (3.0 * static_cast<double>(p.r));
}

void check_sampler_args(const SpectralBounds& bounds, double alpha) {
  if (!(bounds.omega > 0.0))
    throw std::invalid_argument(
        "plan_sampler: f must be positive over the singular-value bracket "
        "(omega > 0)");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("plan_sampler: alpha outside (0,1]");
}

}  // namespace

double admissible_limit(const SpectrumSummary& s) {
  return s.sigma_max * s.sigma_max /
         (4.0 * s.kappa2 * s.kappa2 * s.frob * s.frob);
}

double eps_range_limit(const SpectrumSummary& s, const SpectralBounds& b,
                       double norm_b) {
  return 0.5 * s.sigma_max * norm_b *
         (b.phi + 3.0 * kSqrt2 * b.Omega * s.kappa2 / s.sigma_max);
}

static PlanParameters plan_exact(PlanTarget target,
                                 const SpectrumSummary& summary,
                                 const SpectralBounds& bounds, double norm_b,
                                 double eps_target, double eta, double alpha) {
  check_common(summary, norm_b, eta);
  if (!(eps_target > 0.0))
    throw std::invalid_argument("plan: target accuracy must be > 0");

  PlanParameters p;
  p.target = target;
  p.mode = PlanMode::Exact;
  p.eps_target = eps_target;
  p.eta = eta;
  p.alpha = alpha;
  p.norm_b = norm_b;
  p.summary = summary;
  p.bounds = bounds;
  p.eps = (target == PlanTarget::Coordinate)
              ? eps_target / 2.0
              : eps_target * bounds.omega * alpha * norm_b / 4.0;

  const double limit = eps_range_limit(summary, bounds, norm_b);
  if (!(p.eps < limit)) {
    std::ostringstream msg;
    msg << "plan: sketch-stage eps " << p.eps
        << " must be below (1/2)||A|| ||b|| {phi + 3 sqrt(2) Omega kappa2 / "
           "||A||} = "
        << limit;
    throw std::invalid_argument(msg.str());
  }

  p.theta = p.eps / accuracy_denom(summary, bounds, norm_b, 3.0);
  p.gamma = p.eps / accuracy_denom(summary, bounds, norm_b, 7.0);
  const double adm = admissible_limit(summary);
  if (!(p.theta < adm && p.gamma < adm)) {
    std::ostringstream msg;
    msg << "plan: theta/gamma (" << p.theta << ", " << p.gamma
        << ") exceed the admissible limit ||A||^2/(4 kappa2^2 ||A||_F^2) = "
        << adm;
    throw std::invalid_argument(msg.str());
  }
  p.r = size_from_accuracy(eta, p.theta);
  p.c = size_from_accuracy(eta, p.gamma);
  finish_plan(p);
  return p;
}

PlanParameters plan_coordinate(const SpectrumSummary& summary,
                               const SpectralBounds& bounds, double norm_b,
                               double eps1, double eta) {
  return plan_exact(PlanTarget::Coordinate, summary, bounds, norm_b, eps1, eta,
                    1.0);
}

PlanParameters plan_sampler(const SpectrumSummary& summary,
                            const SpectralBounds& bounds, double norm_b,
                            double eps2, double eta, double alpha) {
  check_sampler_args(bounds, alpha);
  return plan_exact(PlanTarget::Sampler, summary, bounds, norm_b, eps2, eta,
                    alpha);
}

static PlanParameters plan_overridden(PlanTarget target,
                                      const SpectrumSummary& summary,
                                      const SpectralBounds& bounds,
                                      double norm_b, double eta, std::size_t r,
                                      std::size_t c, double alpha,
                                      std::optional<double> eps_inner) {
  check_common(summary, norm_b, eta);
  if (r == 0 || c == 0)
    throw std::invalid_argument("plan: r and c must be positive");

  PlanParameters p;
  p.target = target;
  p.mode = PlanMode::Overridden;
  p.eta = eta;
  p.alpha = alpha;
  p.norm_b = norm_b;
  p.summary = summary;
  p.bounds = bounds;
  p.r = r;
  p.c = c;
  p.theta = std::sqrt(3.0 / (eta * static_cast<double>(r)));
  p.gamma = std::sqrt(3.0 / (eta * static_cast<double>(c)));
  const double eps_theta = p.theta * accuracy_denom(summary, bounds, norm_b, 3.0);
  const double eps_gamma = p.gamma * accuracy_denom(summary, bounds, norm_b, 7.0);
  p.eps = 0.5 * (eps_theta + eps_gamma);
  p.eps_target = (target == PlanTarget::Coordinate)
                     ? 2.0 * p.eps
                     : 4.0 * p.eps / (bounds.omega * alpha * norm_b);
  finish_plan(p);
  if (eps_inner) {
    if (!(*eps_inner > 0.0))
      throw std::invalid_argument("plan: eps_inner must be > 0");
    p.eps_inner = *eps_inner;
  }
  return p;
}

PlanParameters plan_coordinate_overridden(const SpectrumSummary& summary,
                                          const SpectralBounds& bounds,
                                          double norm_b, double eta,
                                          std::size_t r, std::size_t c,
                                          std::optional<double> eps_inner) {
  return plan_overridden(PlanTarget::Coordinate, summary, bounds, norm_b, eta,
                         r, c, 1.0, eps_inner);
}

PlanParameters plan_sampler_overridden(const SpectrumSummary& summary,
                                       const SpectralBounds& bounds,
                                       double norm_b, double eta,
                                       std::size_t r, std::size_t c,
                                       double alpha,
                                       std::optional<double> eps_inner) {
  check_sampler_args(bounds, alpha);
  return plan_overridden(PlanTarget::Sampler, summary, bounds, norm_b, eta, r,
                         c, alpha, eps_inner);
}

nlohmann::json PlanParameters::to_json() const {
  return nlohmann::json{
      {"target", target == PlanTarget::Coordinate ? "coordinate" : "sampler"},
      {"mode", mode == PlanMode::Exact ? "exact" : "overridden"},
      {"eps_target", eps_target},
      {"eps", eps},
      {"eta", eta},
      {"theta", theta},
      {"gamma", gamma},
      {"r", r},
      {"c", c},
      {"eps_inner", eps_inner},
      {"delta_inner", delta_inner},
      {"alpha", alpha},
      {"norm_b", norm_b},
      {"summary",
       {{"sigma_max", summary.sigma_max},
        {"sigma_min", summary.sigma_min},
        {"kappa2", summary.kappa2},
        {"frob", summary.frob}}},
      {"bounds",
       {{"L", {bounds.L.lo, bounds.L.hi}},
        {"Q", {bounds.Q.lo, bounds.Q.hi}},
        {"Omega", bounds.Omega},
        {"phi", bounds.phi},
        {"omega", bounds.omega},
        {"method",
         bounds.method == BoundsMethod::ClosedForm ? "closed-form" : "grid"},
        {"grid_points", bounds.grid_points}}}};
}

PlanParameters PlanParameters::from_json(const nlohmann::json& j) {
  PlanParameters p;
  p.target = j.at("target").get<std::string>() == "sampler"
                 ? PlanTarget::Sampler
                 : PlanTarget::Coordinate;
  p.mode = j.at("mode").get<std::string>() == "overridden"
               ? PlanMode::Overridden
               : PlanMode::Exact;
  p.eps_target = j.at("eps_target").get<double>();
  p.eps = j.at("eps").get<double>();
  p.eta = j.at("eta").get<double>();
  p.theta = j.at("theta").get<double>();
  p.gamma = j.at("gamma").get<double>();
  p.r = j.at("r").get<std::size_t>();
  p.c = j.at("c").get<std::size_t>();
  p.eps_inner = j.at("eps_inner").get<double>();
  p.delta_inner = j.at("delta_inner").get<double>();
  p.alpha = j.at("alpha").get<double>();
  p.norm_b = j.at("norm_b").get<double>();
  const auto& s = j.at("summary");
  p.summary.sigma_max = s.at("sigma_max").get<double>();
  p.summary.sigma_min = s.at("sigma_min").get<double>();
  p.summary.kappa2 = s.at("kappa2").get<double>();
  p.summary.frob = s.at("frob").get<double>();
  const auto& b = j.at("bounds");
  p.bounds.L = {b.at("L")[0].get<double>(), b.at("L")[1].get<double>()};
  p.bounds.Q = {b.at("Q")[0].get<double>(), b.at("Q")[1].get<double>()};
  p.bounds.Omega = b.at("Omega").get<double>();
  p.bounds.phi = b.at("phi").get<double>();
  p.bounds.omega = b.at("omega").get<double>();
  p.bounds.method = b.at("method").get<std::string>() == "grid"
                        ? BoundsMethod::Grid
                        : BoundsMethod::ClosedForm;
  p.bounds.grid_points = b.at("grid_points").get<int>();
  return p;
}

Preprocessed preprocess(const SampledMatrix& A, const DenseVector& b,
                        const SpectralFunction& f, const PlanParameters& plan,
                        const RngStream& rng, ZMode zmode) {
  if (static_cast<std::size_t>(b.size()) != A.rows())
    throw std::invalid_argument("preprocess: b length must equal A rows");
  if (!(A.frobenius_sq() > 0.0))
    throw std::domain_error("preprocess: all-zero matrix");

  Preprocessed pre;
  RngStream rows_rng = rng.split(stream::kSketchRows);
  RngStream cols_rng = rng.split(stream::kSketchCols);
  pre.rs = sample_rows(A, plan.r, rows_rng);
  pre.ws = sample_columns(A, pre.rs, plan.c, cols_rng);

  // Truncate the small SVD just below the nontrivial singular-value
  // bracket L = [||A||/(sqrt(2) kappa2), ...], separating signal from the
  // rank-deficient directions of W.
  const double tau = plan.summary.sigma_max / (2.0 * plan.summary.kappa2);
  pre.wsvd = svd(pre.ws.W, tau);
  pre.mid = mid_matrix(pre.wsvd, f);

  pre.z.resize(static_cast<Eigen::Index>(plan.r));
  if (zmode == ZMode::Exact) {
    // Dense z = S A^* b via an explicit A^* b; validation use only.
    DenseVector atb = DenseVector::Zero(static_cast<Eigen::Index>(A.cols()));
    for (const auto& t : A.entries())
      atb(static_cast<Eigen::Index>(t.j)) +=
          std::conj(t.value) * b(static_cast<Eigen::Index>(t.i));
    for (std::size_t j = 0; j < plan.r; ++j) {
      Complex sum{0.0, 0.0};
      A.row(pre.rs.row_indices[j]).for_each([&](std::size_t k, Complex v) {
        sum += pre.rs.row_scales[j] * v * atb(static_cast<Eigen::Index>(k));
      });
      pre.z(static_cast<Eigen::Index>(j)) = sum;
    }
  } else {
    // z_j = S_(j,.) A^* b. Estimate the conjugate b^* A u_j with
    // u_j(k) = conj(S_(j,k)); u_j evaluates in O(1) from two queries and
    // has norm ||A||_F / sqrt(r).
    const double norm_b = b.norm();
    const double norm_u = pre.rs.row_norm();
    for (std::size_t j = 0; j < plan.r; ++j) {
      RngStream est_rng = rng.split(stream::kEstimator, j);
      const std::size_t p = pre.rs.row_indices[j];
      const double scale = pre.rs.row_scales[j];
      const auto est = estimate_bilinear(
          [&b](std::size_t i) { return b(static_cast<Eigen::Index>(i)); },
          norm_b, A,
          [&A, p, scale](std::size_t k) {
            return scale * std::conj(A.query(p, k));
          },
          norm_u, plan.eps_inner, plan.delta_inner, est_rng);
      pre.z(static_cast<Eigen::Index>(j)) = std::conj(est.value);
      pre.samples_used += est.samples_used;
    }
  }

  pre.y = pre.mid.P * pre.z;
  return pre;
}

Complex coordinate_from(const Preprocessed& pre, std::size_t i) {
  // (S^* y)_i = sum_s conj(S_(s,i)) y_s; Eigen's dot conjugates its first
  // argument.
  return s_column(pre.rs, i).dot(pre.y);
}

Complex run_coordinate(const SampledMatrix& A, const DenseVector& b,
                       const SpectralFunction& f, std::size_t i,
                       const PlanParameters& plan, const RngStream& rng) {
  if (i >= A.cols())
    throw std::out_of_range("run_coordinate: index out of range");
  const Preprocessed pre = preprocess(A, b, f, plan, rng);
  return coordinate_from(pre, i);
}

LinCombSample run_sampler_draw(const Preprocessed& pre, RngStream& rng) {
  return sample_linear_combination(pre.rs, pre.y, rng);
}

LinCombSample run_sampler(const SampledMatrix& A, const DenseVector& b,
                          const SpectralFunction& f,
                          const PlanParameters& plan, const RngStream& rng) {
  const Preprocessed pre = preprocess(A, b, f, plan, rng);
  RngStream draw_rng = rng.split(stream::kSampler);
  return run_sampler_draw(pre, draw_rng);
}

}  // namespace qsvt
