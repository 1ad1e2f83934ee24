#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "qsvt/estimators.hpp"
#include "qsvt/sampled_matrix.hpp"
#include "qsvt/sketch.hpp"
#include "qsvt/svt_core.hpp"

namespace qsvt {

enum class PlanTarget { Coordinate, Sampler };
enum class PlanMode { Exact, Overridden };

/// Fully resolved run parameters: sketch accuracies (theta, gamma), sketch
/// sizes (r, c), and the per-entry estimator budget (eps_inner, delta_inner).
///
/// Exact mode derives everything from the target accuracy via the error
/// analysis; Overridden mode starts from user-chosen (r, c), reports the
/// implied achievable (theta, gamma) at the stated eta, and back-solves the
/// implied target. The error analysis is monotone in r and c, so overrides
/// larger than the exact-mode sizes only improve the guarantee.
struct PlanParameters {
  PlanTarget target = PlanTarget::Coordinate;
  PlanMode mode = PlanMode::Exact;

  double eps_target = 0;  // accuracy goal: coordinate error or TV budget
  double eps = 0;         // sketch-stage accuracy driving theta and gamma
  double eta = 0;         // total failure probability budget
  double theta = 0, gamma = 0;
  std::size_t r = 0, c = 0;
  double eps_inner = 0;    // additive error per bilinear estimate
  double delta_inner = 0;  // failure probability per bilinear estimate
  double alpha = 1.0;      // assumed projection fraction of b (sampler only)
  double norm_b = 0;

  SpectrumSummary summary;
  SpectralBounds bounds;

  nlohmann::json to_json() const;
  static PlanParameters from_json(const nlohmann::json& j);
};

/// Largest admissible value for theta and gamma:
/// ||A||^2 / (4 kappa2^2 ||A||_F^2).
double admissible_limit(const SpectrumSummary& summary);

/// Upper end of the open range the sketch-stage eps must satisfy:
/// (1/2) ||A|| ||b|| { phi + 3 sqrt(2) Omega kappa2 / ||A|| }.
double eps_range_limit(const SpectrumSummary& summary,
                       const SpectralBounds& bounds, double norm_b);

/// Plan a coordinate-estimation run with target additive error eps1 and
/// failure budget eta. The sketch stage runs at eps = eps1 / 2; theta and
/// gamma follow from the vector-error analysis, r = ceil(3/(eta theta^2)),
/// c = ceil(3/(eta gamma^2)), and the estimator budget is
/// eps_inner = eps1 (||A||/kappa2)^2 / (4 Omega sqrt(r (2 kappa2^2 + 1))),
/// delta_inner = eta / (3 r).
/// Throws when eps1/2 falls outside the admissible eps range.
PlanParameters plan_coordinate(const SpectrumSummary& summary,
                               const SpectralBounds& bounds, double norm_b,
                               double eps1, double eta);

/// Plan an output-sampling run with TV budget eps2. Requires omega > 0 on L
/// and alpha in (0, 1]. The sketch stage runs at
/// eps = eps2 omega alpha ||b|| / 4, and the estimator budget doubles the
/// coordinate denominator:
/// eps_inner = eps2 omega alpha ||b|| (||A||/kappa2)^2
///             / (8 Omega sqrt(r (2 kappa2^2 + 1))).
PlanParameters plan_sampler(const SpectrumSummary& summary,
                            const SpectralBounds& bounds, double norm_b,
                            double eps2, double eta, double alpha = 1.0);

/// Overridden-mode planners: user supplies r and c; theta = sqrt(3/(eta r))
/// and gamma = sqrt(3/(eta c)) are the accuracies those sizes achieve, and
/// the implied sketch-stage eps is the mean of the two back-solved values.
/// eps_inner defaults to the analysis formula at the implied target but may
/// be pinned directly (the analysis value is often impractically small).
PlanParameters plan_coordinate_overridden(
    const SpectrumSummary& summary, const SpectralBounds& bounds,
    double norm_b, double eta, std::size_t r, std::size_t c,
    std::optional<double> eps_inner = std::nullopt);

PlanParameters plan_sampler_overridden(
    const SpectrumSummary& summary, const SpectralBounds& bounds,
    double norm_b, double eta, std::size_t r, std::size_t c,
    double alpha = 1.0, std::optional<double> eps_inner = std::nullopt);

/// Immutable result of the shared preprocessing stage (sketch, small SVD,
/// mid matrix, z estimate, y = P' z). Safe to share across concurrent
/// coordinate queries and sampler draws.
struct Preprocessed {
  RowSketch rs;
  WSketch ws;
  SmallSVD wsvd;
  MidMatrix mid;
  DenseVector z;  // estimate of S A^* b
  DenseVector y;  // P' z
  std::uint64_t samples_used = 0;
};

enum class ZMode {
  Estimated,  // r bilinear estimates at (eps_inner, delta_inner)
  Exact,      // dense z = S A^* b; validation use only
};

/// Sketch A, diagonalize W, build P', estimate z, and form y = P' z.
/// b must be dense and of length A.rows(). The SVD truncates W at
/// tau = ||A|| / (2 kappa2), below the nontrivial singular-value bracket.
/// Randomness: rng.split(stream::kSketchRows), split(stream::kSketchCols),
/// and split(stream::kEstimator, j) for entry j of z, so stages and entries
/// are order-independent.
Preprocessed preprocess(const SampledMatrix& A, const DenseVector& b,
                        const SpectralFunction& f, const PlanParameters& plan,
                        const RngStream& rng, ZMode zmode = ZMode::Estimated);

/// Coordinate i of x' = S^* P' z, via r entry queries.
Complex coordinate_from(const Preprocessed& pre, std::size_t i);

/// End-to-end coordinate estimate: preprocess + coordinate_from.
Complex run_coordinate(const SampledMatrix& A, const DenseVector& b,
                       const SpectralFunction& f, std::size_t i,
                       const PlanParameters& plan, const RngStream& rng);

/// One draw from the distribution of x' = S^* y.
LinCombSample run_sampler_draw(const Preprocessed& pre, RngStream& rng);

/// End-to-end single draw: preprocess + one rejection-sampler draw (uses
/// rng.split(stream::kSampler)).
LinCombSample run_sampler(const SampledMatrix& A, const DenseVector& b,
                          const SpectralFunction& f,
                          const PlanParameters& plan, const RngStream& rng);

}  // namespace qsvt
