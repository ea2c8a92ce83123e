#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "effortfit/harness.hpp"

namespace effortfit {

// Structured report documents (JSON, full precision, round-trip exact) plus
// plot-ready trace CSVs and human-readable tables at 2 decimal places.

nlohmann::json metrics_to_json(const MetricsReport& m);
MetricsReport metrics_from_json(const nlohmann::json& j);

nlohmann::json experiment_to_json(const ExperimentConfig& cfg,
                                  const ExperimentReport& report);
nlohmann::json comparison_to_json(const ExperimentConfig& base,
                                  const ComparisonReport& report);

/// CSV `iteration,best` of the mean convergence trace.
std::string fit_trace_csv(const ExperimentReport& report);

/// CSV `iteration,firefly,ga,pso` of one model row of the comparison grid.
std::string compare_trace_csv(const ComparisonReport& report, ModelKind model);

/// Two-column (training / testing) metric table for a single experiment.
std::string fit_table(const ExperimentConfig& cfg, const ExperimentReport& report);

/// Six-column table (training and testing x FA/GA/PSO) for one model.
std::string compare_table(const ComparisonReport& report, ModelKind model);

void write_text_file(const std::string& path, const std::string& content);

} // namespace effortfit
