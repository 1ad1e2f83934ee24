// Experiment harness: synthetic instance generation, planning, coordinate
// queries, output sampling, the validation suite, and micro-benchmarks.
//
// Every subcommand reads an optional --config JSON; individual flags
// override same-named config fields. All randomness flows from --seed
// through named stream splits, so identical config + seed reproduces
// byte-identical reports (validate deliberately omits wall-times; bench
// carries the timing).

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsvt/estimators.hpp"
#include "qsvt/instance.hpp"
#include "qsvt/io.hpp"
#include "qsvt/oracle.hpp"
#include "qsvt/pipeline.hpp"

using nlohmann::json;
using namespace qsvt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitValidation = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Configuration

struct Options {
  json cfg = json::object();

  std::uint64_t seed() const { return cfg.value("seed", std::uint64_t{1}); }
  unsigned threads() const {
    const auto t = cfg.value("threads", 1u);
    return t == 0 ? std::max(1u, std::thread::hardware_concurrency()) : t;
  }
  std::string out() const { return cfg.value("out", std::string{}); }
};

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config: " + path);
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
}

std::vector<double> parse_sigma_list(const std::string& s) {
  std::vector<double> out;
  std::istringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw ConfigError("bad singular value: " + tok);
    }
  }
  return out;
}

SpectralFunction function_from(const json& cfg) {
  const json f = cfg.value("function", json{{"name", "identity"}});
  const std::string name = f.value("name", std::string{"identity"});
  if (name == "identity") return SpectralFunction::identity();
  if (name == "inverse") return SpectralFunction::inverse();
  if (name == "power") return SpectralFunction::power(f.value("param", 2.0));
  if (name == "threshold")
    return SpectralFunction::threshold(f.value("param", 0.5));
  if (name == "table") {
    if (!f.contains("table"))
      throw ConfigError("function.table path required for table functions");
    return SpectralFunction::table_from_csv(f["table"].get<std::string>());
  }
  throw ConfigError("unknown function: " + name);
}

std::vector<double> sigma_from_instance(const json& inst) {
  if (inst.contains("sigma"))
    return inst["sigma"].get<std::vector<double>>();
  const auto rank = inst.value("rank", std::size_t{0});
  std::vector<double> sigma(rank);
  const double hi = inst.value("sigma_max", 1.0);
  const double lo = inst.value("sigma_min", hi);
  for (std::size_t i = 0; i < rank; ++i)
    sigma[i] = rank > 1
                   ? hi + (lo - hi) * static_cast<double>(i) /
                             static_cast<double>(rank - 1)
                   : hi;
  return sigma;
}

// A loaded or synthesized problem instance, with the dense mirror and the
// exact spectrum facts used for planning and oracle comparisons.
struct Problem {
  SampledMatrix A{1, 1};  // placeholder shape; load_problem always reassigns
  DenseMatrix A_dense;
  DenseVector b;
  SpectrumSummary summary;
};

SpectrumSummary summary_from_dense(const DenseMatrix& A) {
  const Eigen::VectorXd s = singular_values(A);
  std::vector<double> nonzero;
  const double tol =
      static_cast<double>(std::max(A.rows(), A.cols())) *
      std::numeric_limits<double>::epsilon() * (s.size() ? s(0) : 0.0);
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol) nonzero.push_back(s(i));
  return SpectrumSummary::from_spectrum(nonzero);
}

Problem load_problem(const Options& opt) {
  Problem p;
  const json& cfg = opt.cfg;
  if (cfg.contains("matrix")) {
    p.A = load_csv(cfg["matrix"].get<std::string>());
    p.A_dense = to_dense(p.A);
    p.summary = summary_from_dense(p.A_dense);
    if (cfg.contains("vector")) {
      const SampledMatrix bmat = load_csv(cfg["vector"].get<std::string>());
      if (bmat.cols() != 1 || bmat.rows() != p.A.rows())
        throw ConfigError("vector file must be a (rows-of-A) x 1 matrix");
      p.b = to_dense(bmat).col(0);
    } else {
      RngStream rng(opt.seed(), stream::kInstance, 1);
      p.b = random_unit_vector(p.A.rows(), rng);
    }
    return p;
  }
  if (!cfg.contains("instance"))
    throw ConfigError("config needs either \"matrix\" or \"instance\"");
  const json inst = cfg["instance"];
  const auto m = inst.value("m", std::size_t{0});
  const auto n = inst.value("n", std::size_t{0});
  if (m == 0 || n == 0) throw ConfigError("instance.m and instance.n required");
  const auto sigma = sigma_from_instance(inst);
  const bool real = inst.value("real", false);
  RngStream rng(opt.seed(), stream::kInstance, 0);
  p.A_dense = synthesize_matrix(m, n, sigma, rng, real);
  p.A = dense_to_sampled(p.A_dense);
  p.summary = sigma.empty() ? SpectrumSummary{}
                            : SpectrumSummary::from_spectrum(sigma);
  RngStream brng(opt.seed(), stream::kInstance, 1);
  const std::string bkind = inst.value("b", std::string{"random"});
  if (bkind == "aligned")
    p.b = aligned_unit_vector(p.A_dense, brng);
  else if (bkind == "random")
    p.b = random_unit_vector(m, brng, real);
  else
    throw ConfigError("instance.b must be \"random\" or \"aligned\"");
  return p;
}

PlanParameters plan_from(const Options& opt, const Problem& p,
                         const SpectralFunction& f) {
  const json& cfg = opt.cfg;
  const json target = cfg.value("target", json{{"kind", "coordinate"}});
  const json mode = cfg.value("mode", json{{"kind", "exact"}});
  const std::string tkind = target.value("kind", std::string{"coordinate"});
  const double eps = target.value("eps", 0.1);
  const double eta = target.value("eta", 0.2);
  const double alpha = target.value("alpha", 1.0);
  const double norm_b = p.b.norm();

  const auto [L, Q] = intervals(p.summary);
  const SpectralBounds bounds = bounds_over_L(f, L);

  const std::string mkind = mode.value("kind", std::string{"exact"});
  if (mkind == "exact") {
    if (tkind == "coordinate")
      return plan_coordinate(p.summary, bounds, norm_b, eps, eta);
    if (tkind == "sampler")
      return plan_sampler(p.summary, bounds, norm_b, eps, eta, alpha);
    throw ConfigError("target.kind must be \"coordinate\" or \"sampler\"");
  }
  if (mkind != "overridden")
    throw ConfigError("mode.kind must be \"exact\" or \"overridden\"");
  const auto r = mode.value("r", std::size_t{0});
  const auto c = mode.value("c", std::size_t{0});
  if (r == 0 || c == 0)
    throw ConfigError("overridden mode requires positive mode.r and mode.c");
  std::optional<double> eps_inner;
  if (mode.contains("eps_inner")) eps_inner = mode["eps_inner"].get<double>();
  if (tkind == "coordinate")
    return plan_coordinate_overridden(p.summary, bounds, norm_b, eta, r, c,
                                      eps_inner);
  if (tkind == "sampler")
    return plan_sampler_overridden(p.summary, bounds, norm_b, eta, r, c, alpha,
                                   eps_inner);
  throw ConfigError("target.kind must be \"coordinate\" or \"sampler\"");
}

void emit(const Options& opt, const json& report) {
  const std::string text = report.dump(2);
  if (!opt.out().empty()) {
    std::ofstream out(opt.out());
    if (!out) throw ConfigError("cannot open output: " + opt.out());
    out << text << '\n';
  }
  std::cout << text << '\n';
}

// Deterministic parallel-for: results land in slot `t` regardless of which
// thread ran trial t.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t t = 0; t < count; ++t) body(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const unsigned width = std::min<unsigned>(threads, count);
  for (unsigned w = 0; w < width; ++w)
    pool.emplace_back([&] {
      for (std::size_t t = next++; t < count; t = next++) body(t);
    });
  for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_gen(const Options& opt) {
  const json& cfg = opt.cfg;
  if (!cfg.contains("instance")) throw ConfigError("gen requires an instance spec");
  const std::string out = opt.out().empty() ? "instance" : opt.out();
  const Problem p = load_problem(opt);
  save_csv(p.A, out + ".csv");
  std::vector<SampledMatrix::Triplet> bents;
  for (Eigen::Index i = 0; i < p.b.size(); ++i)
    if (p.b(i) != Complex{0.0, 0.0})
      bents.push_back({static_cast<std::size_t>(i), 0, p.b(i)});
  save_csv(SampledMatrix::build(p.A.rows(), 1, bents), out + ".b.csv");
  emit(Options{json{{"out", ""}}},
       json{{"matrix", out + ".csv"},
            {"vector", out + ".b.csv"},
            {"m", p.A.rows()},
            {"n", p.A.cols()},
            {"nnz", p.A.nnz()}});
  return kExitOk;
}

int cmd_plan(const Options& opt) {
  const Problem p = load_problem(opt);
  const SpectralFunction f = function_from(opt.cfg);
  const PlanParameters plan = plan_from(opt, p, f);
  emit(opt, json{{"config", opt.cfg}, {"plan", plan.to_json()}});
  return kExitOk;
}

int cmd_query(const Options& opt) {
  const json& cfg = opt.cfg;
  const Problem p = load_problem(opt);
  const SpectralFunction f = function_from(cfg);
  const PlanParameters plan = plan_from(opt, p, f);
  const auto index = cfg.value("index", std::size_t{0});
  const auto trials = cfg.value("trials", std::size_t{1});
  if (index >= p.A.cols()) throw ConfigError("index out of range");

  const DenseVector x_true = exact_svt_apply(p.A_dense, f, p.b);
  const Complex truth = x_true(static_cast<Eigen::Index>(index));

  std::vector<json> per_trial(trials);
  std::size_t successes = 0;
  std::mutex mu;
  parallel_for(trials, opt.threads(), [&](std::size_t t) {
    const RngStream rng(opt.seed(), stream::kTrial, t);
    const Complex est = run_coordinate(p.A, p.b, f, index, plan, rng);
    const double err = std::abs(est - truth);
    const bool ok = err <= plan.eps_target;
    json rec{{"trial", t},
             {"estimate", {est.real(), est.imag()}},
             {"error", err},
             {"within_eps", ok}};
    std::lock_guard<std::mutex> lock(mu);
    per_trial[t] = std::move(rec);
    if (ok) ++successes;
  });

  emit(opt, json{{"config", cfg},
                 {"plan", plan.to_json()},
                 {"index", index},
                 {"oracle", {truth.real(), truth.imag()}},
                 {"trials", per_trial},
                 {"success_rate",
                  static_cast<double>(successes) / static_cast<double>(trials)}});
  return kExitOk;
}

int cmd_sample(const Options& opt) {
  const json& cfg = opt.cfg;
  const Problem p = load_problem(opt);
  const SpectralFunction f = function_from(cfg);
  const PlanParameters plan = plan_from(opt, p, f);
  const auto draws = cfg.value("draws", std::size_t{10000});
  if (draws == 0) throw ConfigError("draws must be positive");

  const RngStream root(opt.seed(), stream::kTrial, 0);
  const Preprocessed pre = preprocess(p.A, p.b, f, plan, root);
  RngStream draw_rng = root.split(stream::kSampler);

  std::vector<std::uint64_t> counts(p.A.cols(), 0);
  std::uint64_t total_iters = 0;
  for (std::size_t d = 0; d < draws; ++d) {
    const LinCombSample s = run_sampler_draw(pre, draw_rng);
    ++counts[s.index];
    total_iters += s.iterations;
  }

  const DenseVector x_true = exact_svt_apply(p.A_dense, f, p.b);
  const Eigen::VectorXd truth = exact_distribution(x_true);
  double tv = 0.0;
  for (std::size_t j = 0; j < counts.size(); ++j)
    tv += std::abs(static_cast<double>(counts[j]) /
                       static_cast<double>(draws) -
                   truth(static_cast<Eigen::Index>(j)));
  tv *= 0.5;

  emit(opt, json{{"config", cfg},
                 {"plan", plan.to_json()},
                 {"draws", draws},
                 {"empirical_tv", tv},
                 {"mean_iterations",
                  static_cast<double>(total_iters) / static_cast<double>(draws)},
                 {"samples_used", pre.samples_used}});
  return kExitOk;
}

// The validation suite: every inequality checker on seeded random inputs,
// plus the structural identities the pipeline relies on. The report is
// fully deterministic (no wall-times) so identical seeds give identical
// bytes.
int cmd_validate(const Options& opt) {
  const std::uint64_t seed = opt.seed();
  json checks = json::array();
  bool all_pass = true;
  const auto record = [&](const std::string& name, const BoundCheck& c) {
    checks.push_back(json{{"name", name},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"pass", c.pass}});
    all_pass = all_pass && c.pass;
  };
  const auto record_flag = [&](const std::string& name, bool ok, double value) {
    checks.push_back(json{{"name", name}, {"value", value}, {"pass", ok}});
    all_pass = all_pass && ok;
  };

  RngStream root(seed, stream::kValidate);
  const SpectralFunction fns[] = {SpectralFunction::identity(),
                                  SpectralFunction::inverse(),
                                  SpectralFunction::power(2.0)};

  for (std::size_t k = 0; k < 20; ++k) {
    RngStream rng = root.split(0x100, k);
    const std::size_t m = 8 + rng.uniform_int(8);
    const std::size_t n = 6 + rng.uniform_int(8);
    DenseMatrix M(m, n), N(m, n);
    for (Eigen::Index i = 0; i < M.rows(); ++i)
      for (Eigen::Index j = 0; j < M.cols(); ++j) {
        M(i, j) = Complex{rng.normal(), rng.normal()};
        N(i, j) = M(i, j) + 0.1 * Complex{rng.normal(), rng.normal()};
      }
    record("weyl/" + std::to_string(k), check_weyl(M, N));
    DenseVector v(n), w(n);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      v(i) = Complex{rng.normal(), rng.normal()};
      w(i) = v(i) + 0.2 * Complex{rng.normal(), rng.normal()};
    }
    record("tv_vector_bound/" + std::to_string(k),
           check_tv_vector_bound(v, w));
    const auto norms = check_norm_inequalities(M, N.adjoint(), v);
    record("norm_Mv/" + std::to_string(k), norms[0]);
    record("norm_specF/" + std::to_string(k), norms[1]);
    record("norm_Fspec/" + std::to_string(k), norms[2]);

    const DenseMatrix X = M * M.adjoint();
    const DenseMatrix Y = N * N.adjoint();
    record("fpsd/" + std::to_string(k),
           check_fpsd(X, Y, fns[k % 3]));
  }

  // FKV concentration at a small scale: beta chosen loosely so the check
  // is overwhelmingly likely to pass at the planned sketch size.
  for (std::size_t k = 0; k < 5; ++k) {
    RngStream rng = root.split(0x200, k);
    const std::vector<double> sigma{1.0, 0.8, 0.6, 0.45, 0.3};
    const DenseMatrix A = synthesize_matrix(40, 30, sigma, rng);
    const SampledMatrix As = dense_to_sampled(A);
    const double beta = 0.5;
    const double eta = 0.3;
    const auto r = static_cast<std::size_t>(
        std::ceil(3.0 / (eta * beta * beta)));
    RngStream srng = rng.split(stream::kSketchRows);
    const RowSketch rs = sample_rows(As, r, srng);
    record("fkv/" + std::to_string(k),
           check_fkv(A, materialize_s(rs), beta));
  }

  // Mid-matrix closed form vs the literal four-factor product, and the
  // exact-z end-to-end identity x' = S* P' S A* b on a well-conditioned
  // instance.
  for (std::size_t k = 0; k < 3; ++k) {
    RngStream rng = root.split(0x300, k);
    DenseMatrix W(6, 5);
    for (Eigen::Index i = 0; i < W.rows(); ++i)
      for (Eigen::Index j = 0; j < W.cols(); ++j)
        W(i, j) = Complex{rng.normal(), rng.normal()};
    const SpectralFunction& f = fns[k % 3];
    const SmallSVD ws = svd(W);
    const DenseMatrix closed = mid_matrix(ws, f).P;
    const DenseMatrix literal = phi(ws, SpectralFunction::inverse()) *
                                phi_adjoint(ws, f) *
                                phi(ws, SpectralFunction::inverse()) *
                                phi_adjoint(ws, SpectralFunction::inverse());
    const double rel = (closed - literal).norm() / literal.norm();
    record_flag("mid_matrix_closed_form/" + std::to_string(k), rel <= 1e-9,
                rel);
    const double herm = (closed - closed.adjoint()).norm();
    record_flag("mid_matrix_hermitian/" + std::to_string(k), herm <= 1e-10,
                herm);
  }

  // Sampling fidelity of the tree structure (chi-square free; plain TV at
  // a forgiving desk-scale threshold).
  {
    RngStream rng = root.split(0x400);
    DenseMatrix A(16, 16);
    for (Eigen::Index i = 0; i < A.rows(); ++i)
      for (Eigen::Index j = 0; j < A.cols(); ++j)
        A(i, j) = Complex{rng.normal(), rng.normal()};
    const SampledMatrix As = dense_to_sampled(A);
    const std::size_t draws = 200000;
    std::vector<double> emp(16, 0.0);
    for (std::size_t d = 0; d < draws; ++d)
      emp[As.sample_row(rng)] += 1.0 / static_cast<double>(draws);
    double tv = 0.0;
    for (std::size_t i = 0; i < 16; ++i)
      tv += std::abs(emp[i] - As.row_norm_sq(i) / As.frobenius_sq());
    tv *= 0.5;
    record_flag("row_sampling_tv", tv <= 0.02, tv);
  }

  const json report{{"seed", seed}, {"checks", checks}, {"pass", all_pass}};
  emit(opt, report);
  return all_pass ? kExitOk : kExitValidation;
}

int cmd_bench(const Options& opt) {
  using clock = std::chrono::steady_clock;
  const std::uint64_t seed = opt.seed();
  RngStream rng(seed, stream::kValidate, 99);
  json report;
  report["seed"] = seed;

  DenseMatrix A(64, 64);
  for (Eigen::Index i = 0; i < 64; ++i)
    for (Eigen::Index j = 0; j < 64; ++j)
      A(i, j) = Complex{rng.normal(), rng.normal()};
  SampledMatrix As = dense_to_sampled(A);

  {
    As.reset_node_visits();
    const auto t0 = clock::now();
    const std::size_t n = 1000000;
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t i = As.sample_row(rng);
      acc += As.sample_in_row(i, rng);
    }
    const auto dt = std::chrono::duration<double>(clock::now() - t0).count();
    report["sample_pair"] = {{"ops", n},
                             {"seconds", dt},
                             {"node_visits", As.node_visits()},
                             {"checksum", acc}};
  }
  {
    As.reset_node_visits();
    const auto t0 = clock::now();
    const std::size_t n = 100000;
    for (std::size_t k = 0; k < n; ++k)
      As.update(rng.uniform_int(64), rng.uniform_int(64),
                Complex{rng.normal(), rng.normal()});
    const auto dt = std::chrono::duration<double>(clock::now() - t0).count();
    report["update"] = {{"ops", n},
                        {"seconds", dt},
                        {"node_visits", As.node_visits()}};
  }
  {
    const auto t0 = clock::now();
    RngStream srng = rng.split(stream::kSketchRows);
    const RowSketch rs = sample_rows(As, 400, srng);
    RngStream crng = rng.split(stream::kSketchCols);
    const WSketch ws = sample_columns(As, rs, 400, crng);
    const auto t1 = clock::now();
    const SmallSVD wsvd = svd(ws.W);
    const auto t2 = clock::now();
    report["sketch_400x400"] = {
        {"seconds", std::chrono::duration<double>(t1 - t0).count()}};
    report["svd_400x400"] = {
        {"seconds", std::chrono::duration<double>(t2 - t1).count()},
        {"rank", wsvd.rank()}};
  }
  emit(opt, report);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"l2-sampling singular value transformation toolkit"};
  app.require_subcommand(1);

  // Flags shared by all subcommands; each overrides the same-named config
  // field when given.
  struct Flags {
    std::string config, out, matrix, vector_path, sigma;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
    std::optional<std::size_t> index, trials, draws, m, n, rank, r, c;
    std::optional<double> eps, eta, alpha, eps_inner;
    bool real = false;
  } fl;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", fl.config, "JSON config file");
    sub->add_option("--seed", fl.seed, "master RNG seed");
    sub->add_option("--threads", fl.threads, "worker thread cap");
    sub->add_option("--out", fl.out, "output path");
    sub->add_option("--matrix", fl.matrix, "matrix CSV path");
    sub->add_option("--vector", fl.vector_path, "vector CSV path");
    sub->add_option("--index", fl.index, "coordinate index");
    sub->add_option("--trials", fl.trials, "trial count");
    sub->add_option("--draws", fl.draws, "sampler draw count");
    sub->add_option("--m", fl.m, "instance rows");
    sub->add_option("--n", fl.n, "instance cols");
    sub->add_option("--rank", fl.rank, "instance rank");
    sub->add_option("--sigma", fl.sigma, "comma-separated singular values");
    sub->add_flag("--real", fl.real, "real-valued instance");
    sub->add_option("--eps", fl.eps, "target accuracy");
    sub->add_option("--eta", fl.eta, "failure budget");
    sub->add_option("--alpha", fl.alpha, "projection fraction");
    sub->add_option("--r", fl.r, "row sketch size override");
    sub->add_option("--c", fl.c, "column sketch size override");
    sub->add_option("--eps-inner", fl.eps_inner, "estimator accuracy override");
  };

  CLI::App* gen = app.add_subcommand("gen", "synthesize an instance");
  CLI::App* plan = app.add_subcommand("plan", "print run parameters");
  CLI::App* query = app.add_subcommand("query", "coordinate estimation trials");
  CLI::App* sample = app.add_subcommand("sample", "output-distribution draws");
  CLI::App* validate = app.add_subcommand("validate", "property suite");
  CLI::App* bench = app.add_subcommand("bench", "micro-benchmarks");
  for (CLI::App* sub : {gen, plan, query, sample, validate, bench})
    add_common(sub);

  CLI11_PARSE(app, argc, argv);

  try {
    Options opt;
    if (!fl.config.empty()) opt.cfg = load_config(fl.config);
    if (fl.seed) opt.cfg["seed"] = *fl.seed;
    if (fl.threads) opt.cfg["threads"] = *fl.threads;
    if (!fl.out.empty()) opt.cfg["out"] = fl.out;
    if (!fl.matrix.empty()) opt.cfg["matrix"] = fl.matrix;
    if (!fl.vector_path.empty()) opt.cfg["vector"] = fl.vector_path;
    if (fl.index) opt.cfg["index"] = *fl.index;
    if (fl.trials) opt.cfg["trials"] = *fl.trials;
    if (fl.draws) opt.cfg["draws"] = *fl.draws;
    if (fl.m) opt.cfg["instance"]["m"] = *fl.m;
    if (fl.n) opt.cfg["instance"]["n"] = *fl.n;
    if (fl.rank) opt.cfg["instance"]["rank"] = *fl.rank;
    if (!fl.sigma.empty())
      opt.cfg["instance"]["sigma"] = parse_sigma_list(fl.sigma);
    if (fl.real) opt.cfg["instance"]["real"] = true;
    if (fl.eps) opt.cfg["target"]["eps"] = *fl.eps;
    if (fl.eta) opt.cfg["target"]["eta"] = *fl.eta;
    if (fl.alpha) opt.cfg["target"]["alpha"] = *fl.alpha;
    if (fl.r || fl.c) opt.cfg["mode"]["kind"] = "overridden";
    if (fl.r) opt.cfg["mode"]["r"] = *fl.r;
    if (fl.c) opt.cfg["mode"]["c"] = *fl.c;
    if (fl.eps_inner) opt.cfg["mode"]["eps_inner"] = *fl.eps_inner;

    if (gen->parsed()) return cmd_gen(opt);
    if (plan->parsed()) return cmd_plan(opt);
    if (query->parsed()) return cmd_query(opt);
    if (sample->parsed()) return cmd_sample(opt);
    if (validate->parsed()) return cmd_validate(opt);
    if (bench->parsed()) return cmd_bench(opt);
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}
