#include "effortfit/harness.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace effortfit {

const char* optimizer_name(const OptimizerConfig& cfg) {
  switch (cfg.index()) {
    case 0: return "firefly";
    case 1: return "ga";
    default: return "pso";
  }
}

const char* model_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::Basic: return "basic";
    case ModelKind::ModelI: return "model1";
    case ModelKind::ModelII: return "model2";
  }
  return "?";
}

std::uint64_t derive_run_seed(std::uint64_t master_seed, int run_index) {
  // splitmix64 of master_seed advanced by run_index + 1 strides
  std::uint64_t z = master_seed +
                    0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(run_index) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Objective training_mae_objective(const ModelSpec& spec, const Dataset& train) {
  if (train.records.empty()) throw std::invalid_argument("empty training set");
  const auto n = static_cast<Eigen::Index>(train.records.size());
  Eigen::VectorXd log_kloc(n), me(n), effort(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& r = train.records[i];
    if (!(r.kloc > 0) || !(r.effort > 0))
      throw std::invalid_argument("record " + std::to_string(r.id) +
                                  ": kloc and effort must be > 0");
    log_kloc[i] = std::log(r.kloc);
    me[i] = r.me;
    effort[i] = r.effort;
  }
  const ModelKind kind = spec.kind;
  Objective obj;
  obj.dimension = spec.dimension();
  obj.fn = [kind, log_kloc, me, effort, n](const Eigen::VectorXd& p) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      sum += std::abs(effort[i] - predict_core(kind, p, log_kloc[i], me[i]));
    return sum / static_cast<double>(n);
  };
  return obj;
}

namespace {

MetricsReport mean_metrics(const std::vector<RunResult>& runs, bool test_side) {
  MetricsReport m;
  for (const auto& r : runs) {
    const MetricsReport& s = test_side ? r.test : r.train;
    m.vaf += s.vaf;
    m.mse += s.mse;
    m.mae += s.mae;
    m.mmre += s.mmre;
    m.rmse += s.rmse;
    m.r2 += s.r2;
  }
  const double n = static_cast<double>(runs.size());
  m.vaf /= n;
  m.mse /= n;
  m.mae /= n;
  m.mmre /= n;
  m.rmse /= n;
  m.r2 /= n;
  return m;
}

} // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  if (cfg.runs < 1) throw std::invalid_argument("runs must be >= 1");
  SearchSpace space = cfg.space.dimension() > 0 ? cfg.space
                                                : default_search_space(cfg.model);
  if (space.dimension() != cfg.model.dimension())
    throw std::invalid_argument("search space dimension does not match model");

  const Objective obj = training_mae_objective(cfg.model, cfg.split.train);

  ExperimentReport report;
  report.per_run.resize(cfg.runs);

  auto do_run = [&](int k) {
    const std::uint64_t seed = derive_run_seed(cfg.master_seed, k);
    OptimizationResult opt;
    try {
      opt = std::visit(
          [&](const auto& c) {
            using C = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<C, FireflyConfig>)
              return optimize_firefly(obj, space, c, seed);
            else if constexpr (std::is_same_v<C, GaConfig>)
              return optimize_ga(obj, space, c, seed);
            else
              return optimize_pso(obj, space, c, seed);
          },
          cfg.optimizer);
    } catch (const std::exception& e) {
      throw std::runtime_error("run " + std::to_string(k) + ": " + e.what());
    }
    RunResult r;
    r.seed = seed;
    r.best_params = opt.best_position;
    r.best_score = opt.best_score;
    r.trace = std::move(opt.trace);
    try {
      r.train = evaluate(cfg.model, r.best_params, cfg.split.train);
      r.test = evaluate(cfg.model, r.best_params, cfg.split.test);
    } catch (const std::exception& e) {
      throw std::runtime_error("run " + std::to_string(k) + ": " + e.what());
    }
    report.per_run[k] = std::move(r);
  };

  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1 || cfg.runs == 1) {
    for (int k = 0; k < cfg.runs; ++k) do_run(k);
  } else {
    // runs are independent (own seed, shared immutable data); each worker
    // takes a strided slice and writes only its own slots
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (int k = w; k < cfg.runs; k += jobs) do_run(k);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  report.mean_train = mean_metrics(report.per_run, false);
  report.mean_test = mean_metrics(report.per_run, true);

  std::size_t iters = report.per_run.front().trace.size();
  report.mean_trace.assign(iters, 0.0);
  for (const auto& r : report.per_run)
    for (std::size_t t = 0; t < iters; ++t) report.mean_trace[t] += r.trace[t];
  for (auto& v : report.mean_trace) v /= static_cast<double>(cfg.runs);

  report.best_run = 0;
  for (std::size_t k = 1; k < report.per_run.size(); ++k)
    if (report.per_run[k].best_score < report.per_run[report.best_run].best_score)
      report.best_run = k;
  return report;
}

ComparisonReport compare_all(const ExperimentConfig& base) {
  // iteration budget carries over from the template; everything else per
  // algorithm comes from the per-algorithm defaults
  const int iterations = std::visit([](const auto& c) { return c.iterations; },
                                    base.optimizer);
  const ModelKind models[3] = {ModelKind::Basic, ModelKind::ModelI,
                               ModelKind::ModelII};
  FireflyConfig fa;
  fa.iterations = iterations;
  GaConfig ga;
  ga.iterations = iterations;
  PsoConfig pso;
  pso.iterations = iterations;
  const OptimizerConfig optimizers[3] = {fa, ga, pso};

  ComparisonReport out;
  for (int m = 0; m < 3; ++m) {
    for (int o = 0; o < 3; ++o) {
      ComparisonCell& cell = out.cells[m][o];
      cell.model = models[m];
      cell.optimizer = optimizer_name(optimizers[o]);
      ExperimentConfig cfg = base;
      cfg.model = ModelSpec{models[m]};
      cfg.optimizer = optimizers[o];
      cfg.space = SearchSpace{}; // per-model default box
      try {
        cell.report = run_experiment(cfg);
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
    }
  }
  return out;
}

} // namespace effortfit
