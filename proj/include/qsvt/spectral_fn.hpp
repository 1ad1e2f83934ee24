#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qsvt {

enum class FnKind { Identity, Inverse, Power, Threshold, Table, Derived };

/// A transform f: R>=0 -> R>=0 with f(0) = 0, together with its derivative
/// on R>0. Built-ins carry closed-form derivatives; user functions come
/// from a monotone piecewise-linear table.
class SpectralFunction {
 public:
  static SpectralFunction identity();
  static SpectralFunction inverse();
  static SpectralFunction power(double p);  // x^p, p > 0
  static SpectralFunction threshold(double sigma0);
  static SpectralFunction table(std::vector<double> x, std::vector<double> f,
                                std::vector<double> fprime);
  static SpectralFunction table_from_csv(const std::string& path);

  double operator()(double x) const { return eval_(x); }
  double deriv(double x) const { return deriv_(x); }

  FnKind kind() const { return kind_; }
  double param() const { return param_; }
  const std::string& name() const { return name_; }

  /// f(x) > 0 for all probed x > 0; the sampler path requires this.
  bool positive_on(double lo, double hi, int probes = 100) const;

 private:
  SpectralFunction(FnKind kind, double param, std::string name,
                   std::function<double(double)> eval,
                   std::function<double(double)> deriv);

  FnKind kind_;
  double param_;
  std::string name_;
  std::function<double(double)> eval_;
  std::function<double(double)> deriv_;

  friend SpectralFunction h_of(const SpectralFunction& f);
};

/// Known spectrum facts about the input matrix A.
struct SpectrumSummary {
  double sigma_max = 0;  // ||A|| (spectral norm)
  double sigma_min = 0;  // smallest non-zero singular value
  double kappa2 = 0;     // sigma_max / sigma_min
  double frob = 0;       // ||A||_F

  static SpectrumSummary from_spectrum(const std::vector<double>& sigma);
  void validate() const;
};

struct Interval {
  double lo = 0, hi = 0;
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool strictly_contains(double x) const { return lo < x && x < hi; }
};

enum class BoundsMethod { ClosedForm, Grid };

/// Extrema of f and f' over the interval L.
struct SpectralBounds {
  Interval L, Q;
  double Omega = 0;  // max |f| over L
  double phi = 0;    // max |f'| over L
  double omega = 0;  // min |f| over L
  BoundsMethod method = BoundsMethod::ClosedForm;
  int grid_points = 0;
};

/// The bracket [||A||/(sqrt(2) k2), ||A||/(sqrt(2) k2) * sqrt(2 k2^2+1)]
/// containing the nontrivial singular values of the sketches, and its
/// elementwise square Q.
std::pair<Interval, Interval> intervals(const SpectrumSummary& summary);

/// Extrema of f over L. Closed forms for built-ins; a 10^4-point grid with
/// 1.05 safety inflation for table functions (omega deflated instead).
/// Throws when a threshold sigma0 lies strictly inside L, or when the grid
/// extrema fail to converge under density doubling.
SpectralBounds bounds_over_L(const SpectralFunction& f, Interval L);

/// The induced function h(s) = f(sqrt(s))/sqrt(s) for s > 0, h(0) = 0.
/// Validation-only; the production path never evaluates h.
SpectralFunction h_of(const SpectralFunction& f);

}  // namespace qsvt
