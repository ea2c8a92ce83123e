#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "effortfit/metrics.hpp"
#include "effortfit/optimizers.hpp"

namespace effortfit {

using OptimizerConfig = std::variant<FireflyConfig, GaConfig, PsoConfig>;

const char* optimizer_name(const OptimizerConfig& cfg);
const char* model_name(ModelKind kind);

struct ExperimentConfig {
  ModelSpec model;
  OptimizerConfig optimizer;
  int runs = 25;
  std::uint64_t master_seed = 0;
  SearchSpace space; // empty -> default_search_space(model)
  SplitDataset split;
  int jobs = 1; // worker threads across runs
};

struct RunResult {
  Eigen::VectorXd best_params;
  double best_score = 0.0; // training MAE reached by the optimizer
  MetricsReport train;
  MetricsReport test;
  std::vector<double> trace;
  std::uint64_t seed = 0;
};

struct ExperimentReport {
  std::vector<RunResult> per_run;
  MetricsReport mean_train; // arithmetic mean of each metric over runs
  MetricsReport mean_test;
  std::vector<double> mean_trace; // pointwise mean of traces
  std::size_t best_run = 0;       // index of the lowest best_score run
};

/// Deterministic per-run seed stream: splitmix64 of the master seed combined
/// with the run index, so adding runs never perturbs earlier ones.
std::uint64_t derive_run_seed(std::uint64_t master_seed, int run_index);

/// Training-set MAE of the model as a minimization objective. Built from the
/// training split alone; non-finite predictions score +inf.
Objective training_mae_objective(const ModelSpec& spec, const Dataset& train);

/// Runs the configured optimizer `runs` times with derived seeds, evaluates
/// all six metrics on both split sides and aggregates.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// The full 3x3 grid: {Basic, ModelI, ModelII} x {Firefly, GA, PSO} with the
/// per-algorithm default settings. Cells that fail carry an error string;
/// the remaining cells are still computed.
struct ComparisonCell {
  ModelKind model;
  std::string optimizer;
  std::optional<ExperimentReport> report;
  std::string error;
};

struct ComparisonReport {
  std::array<std::array<ComparisonCell, 3>, 3> cells; // [model][optimizer]
};

ComparisonReport compare_all(const ExperimentConfig& base);

} // namespace effortfit
