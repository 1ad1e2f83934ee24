#include "qsvt/spectral_fn.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace qsvt {

SpectralFunction::SpectralFunction(FnKind kind, double param, std::string name,
                                   std::function<double(double)> eval,
                                   std::function<double(double)> deriv)
    : kind_(kind),
      param_(param),
      name_(std::move(name)),
      eval_(std::move(eval)),
      deriv_(std::move(deriv)) {}

SpectralFunction SpectralFunction::identity() {
  return SpectralFunction(FnKind::Identity, 0.0, "identity",
                          [](double x) { return x; },
                          [](double) { return 1.0; });
}

SpectralFunction SpectralFunction::inverse() {
  return SpectralFunction(
      FnKind::Inverse, 0.0, "inverse",
      [](double x) { return x > 0.0 ? 1.0 / x : 0.0; },
      [](double x) { return -1.0 / (x * x); });
}

SpectralFunction SpectralFunction::power(double p) {
  if (!(p > 0.0))
    throw std::invalid_argument("power: exponent must be positive (f(0)=0)");
  return SpectralFunction(
      FnKind::Power, p, "power(" + std::to_string(p) + ")",
      [p](double x) { return std::pow(x, p); },
      [p](double x) { return p * std::pow(x, p - 1.0); });
}

SpectralFunction SpectralFunction::threshold(double sigma0) {
  if (!(sigma0 > 0.0))
    throw std::invalid_argument("threshold: sigma0 must be positive");
  return SpectralFunction(
      FnKind::Threshold, sigma0, "threshold(" + std::to_string(sigma0) + ")",
      [sigma0](double x) { return x >= sigma0 ? x : 0.0; },
      [sigma0](double x) { return x >= sigma0 ? 1.0 : 0.0; });
}

namespace {

struct TableData {
  std::vector<double> x, f, fp;

  double interp(const std::vector<double>& y, double v) const {
    if (v <= x.front()) return y.front() * (x.front() > 0.0 ? v / x.front() : 1.0);
    if (v >= x.back()) return y.back();
    const auto it = std::upper_bound(x.begin(), x.end(), v);
    const std::size_t k = static_cast<std::size_t>(it - x.begin());
    const double t = (v - x[k - 1]) / (x[k] - x[k - 1]);
    return y[k - 1] + t * (y[k] - y[k - 1]);
  }
};

}  // namespace

SpectralFunction SpectralFunction::table(std::vector<double> x,
                                         std::vector<double> f,
                                         std::vector<double> fprime) {
  if (x.size() < 2 || x.size() != f.size() || x.size() != fprime.size())
    throw std::invalid_argument("table: need >= 2 rows of equal length");
  for (std::size_t k = 1; k < x.size(); ++k)
    if (!(x[k] > x[k - 1]))
      throw std::invalid_argument("table: x must be strictly increasing");
  if (!(x.front() >= 0.0))
    throw std::invalid_argument("table: x must be non-negative");
  auto data = std::make_shared<TableData>(TableData{std::move(x), std::move(f),
                                                    std::move(fprime)});
  return SpectralFunction(
      FnKind::Table, 0.0, "table",
      [data](double v) { return v == 0.0 ? 0.0 : data->interp(data->f, v); },
      [data](double v) { return data->interp(data->fp, v); });
}

SpectralFunction SpectralFunction::table_from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("table_from_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("x,f,fprime", 0) != 0)
    throw std::runtime_error("table_from_csv: expected header 'x,f,fprime'");
  std::vector<double> x, f, fp;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    double a, b, c;
    char comma;
    if (!(ss >> a >> comma >> b >> comma >> c))
      throw std::runtime_error("table_from_csv: malformed row: " + line);
    x.push_back(a);
    f.push_back(b);
    fp.push_back(c);
  }
  return table(std::move(x), std::move(f), std::move(fp));
}

bool SpectralFunction::positive_on(double lo, double hi, int probes) const {
  for (int k = 0; k < probes; ++k) {
    const double x = lo + (hi - lo) * (k + 0.5) / probes;
    if (!(eval_(x) > 0.0)) return false;
  }
  return true;
}

SpectrumSummary SpectrumSummary::from_spectrum(const std::vector<double>& sigma) {
  SpectrumSummary s;
  double fsq = 0.0;
  s.sigma_min = std::numeric_limits<double>::infinity();
  for (double v : sigma) {
    if (v <= 0.0) continue;
    s.sigma_max = std::max(s.sigma_max, v);
    s.sigma_min = std::min(s.sigma_min, v);
    fsq += v * v;
  }
  if (!(s.sigma_max > 0.0))
    throw std::invalid_argument("SpectrumSummary: no positive singular value");
  s.kappa2 = s.sigma_max / s.sigma_min;
  s.frob = std::sqrt(fsq);
  return s;
}

void SpectrumSummary::validate() const {
  if (!(sigma_min > 0.0) || !(sigma_max >= sigma_min) || !(kappa2 >= 1.0) ||
      !(frob >= sigma_max))
    throw std::invalid_argument("SpectrumSummary: invariants violated");
}

std::pair<Interval, Interval> intervals(const SpectrumSummary& summary) {
  summary.validate();
  const double lo = summary.sigma_max / (std::sqrt(2.0) * summary.kappa2);
  const double hi = lo * std::sqrt(2.0 * summary.kappa2 * summary.kappa2 + 1.0);
  return {Interval{lo, hi}, Interval{lo * lo, hi * hi}};
}

namespace {

SpectralBounds grid_bounds(const SpectralFunction& f, Interval L, int points) {
  SpectralBounds b;
  b.L = L;
  b.Q = {L.lo * L.lo, L.hi * L.hi};
  b.method = BoundsMethod::Grid;
  b.grid_points = points;
  double omega = std::numeric_limits<double>::infinity();
  double Omega = 0.0, phi = 0.0;
  for (int k = 0; k <= points; ++k) {
    const double x = L.lo + (L.hi - L.lo) * k / points;
    Omega = std::max(Omega, std::abs(f(x)));
    phi = std::max(phi, std::abs(f.deriv(x)));
    omega = std::min(omega, std::abs(f(x)));
  }
  b.Omega = Omega * 1.05;
  b.phi = phi * 1.05;
  b.omega = omega / 1.05;
  return b;
}

}  // namespace

SpectralBounds bounds_over_L(const SpectralFunction& f, Interval L) {
  if (!(L.hi >= L.lo) || !(L.lo > 0.0))
    throw std::invalid_argument("bounds_over_L: invalid interval");
  SpectralBounds b;
  b.L = L;
  b.Q = {L.lo * L.lo, L.hi * L.hi};
  switch (f.kind()) {
    case FnKind::Identity:
      b.Omega = L.hi;
      b.phi = 1.0;
      b.omega = L.lo;
      return b;
    case FnKind::Inverse:
      b.Omega = 1.0 / L.lo;
      b.phi = 1.0 / (L.lo * L.lo);
      b.omega = 1.0 / L.hi;
      return b;
    case FnKind::Power: {
      const double p = f.param();
      b.Omega = std::pow(L.hi, p);
      b.omega = std::pow(L.lo, p);
      b.phi = p >= 1.0 ? p * std::pow(L.hi, p - 1.0) : p * std::pow(L.lo, p - 1.0);
      return b;
    }
    case FnKind::Threshold: {
      const double s0 = f.param();
      if (L.strictly_contains(s0))
        throw std::domain_error("bounds_over_L: threshold not differentiable on L");
      if (s0 <= L.lo) {  // identity on L
        b.Omega = L.hi;
        b.phi = 1.0;
        b.omega = L.lo;
      } else if (s0 == L.hi) {  // nonzero only at the right endpoint
        b.Omega = L.hi;
        b.phi = 1.0;
        b.omega = 0.0;
      } else {  // zero on all of L
        b.Omega = b.phi = b.omega = 0.0;
      }
      return b;
    }
    case FnKind::Table:
    case FnKind::Derived: {
      const int n = 10000;
      const SpectralBounds coarse = grid_bounds(f, L, n);
      const SpectralBounds fine = grid_bounds(f, L, 2 * n);
      const auto close = [](double a, double c) {
        return std::abs(a - c) <= 0.01 * std::max({std::abs(a), std::abs(c), 1e-300});
      };
      if (!close(coarse.Omega, fine.Omega) || !close(coarse.phi, fine.phi) ||
          !close(coarse.omega, fine.omega))
        throw std::runtime_error("bounds_over_L: grid extrema did not converge");
      return fine;
    }
  }
  throw std::logic_error("bounds_over_L: unknown kind");
}

SpectralFunction h_of(const SpectralFunction& f) {
  if (f(0.0) != 0.0) throw std::invalid_argument("h_of: requires f(0) = 0");
  auto eval = f.eval_;
  auto deriv = f.deriv_;
  return SpectralFunction(
      FnKind::Derived, 0.0, "h[" + f.name() + "]",
      [eval](double s) {
        if (s <= 0.0) return 0.0;
        const double r = std::sqrt(s);
        return eval(r) / r;
      },
      [eval, deriv](double s) {
        const double r = std::sqrt(s);
        return (r * deriv(r) - eval(r)) / (2.0 * s * r);
      });
}

}  // namespace qsvt
