#include "effortfit/report_io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace effortfit {

using nlohmann::json;

namespace {

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

json space_to_json(const SearchSpace& s) {
  return {{"lower", std::vector<double>(s.lower.data(), s.lower.data() + s.lower.size())},
          {"upper", std::vector<double>(s.upper.data(), s.upper.data() + s.upper.size())}};
}

json optimizer_to_json(const OptimizerConfig& cfg) {
  json j;
  j["name"] = optimizer_name(cfg);
  std::visit(
      [&](const auto& c) {
        using C = std::decay_t<decltype(c)>;
        j["iterations"] = c.iterations;
        j["population"] = c.population;
        if constexpr (std::is_same_v<C, FireflyConfig>) {
          j["alpha"] = c.alpha;
          j["betamin"] = c.betamin;
          j["beta0"] = c.beta0;
          j["gamma"] = c.gamma;
          j["alpha_decay"] = c.effective_alpha_decay();
        } else if constexpr (std::is_same_v<C, GaConfig>) {
          j["tournament_size"] = c.tournament_size;
          j["crossover_probability"] = c.crossover_probability;
          j["mutation_probability"] = c.mutation_probability;
          j["elitism_count"] = c.elitism_count;
        } else {
          j["c1"] = c.c1;
          j["c2"] = c.c2;
          j["inertia_start"] = c.inertia_start;
          j["inertia_end"] = c.inertia_end;
          j["max_velocity"] = c.max_velocity;
        }
      },
      cfg);
  return j;
}

json report_body(const ExperimentReport& r) {
  json j;
  j["runs"] = r.per_run.size();
  j["mean_train"] = metrics_to_json(r.mean_train);
  j["mean_test"] = metrics_to_json(r.mean_test);
  j["mean_trace"] = r.mean_trace;
  j["best_run"] = r.best_run;
  const auto& b = r.per_run[r.best_run];
  j["best_params"] =
      std::vector<double>(b.best_params.data(), b.best_params.data() + b.best_params.size());
  j["best_score"] = b.best_score;
  json runs = json::array();
  for (const auto& run : r.per_run) {
    json e;
    e["seed"] = run.seed;
    e["params"] = std::vector<double>(run.best_params.data(),
                                      run.best_params.data() + run.best_params.size());
    e["score"] = run.best_score;
    e["train"] = metrics_to_json(run.train);
    e["test"] = metrics_to_json(run.test);
    runs.push_back(std::move(e));
  }
  j["per_run"] = std::move(runs);
  return j;
}

} // namespace

json metrics_to_json(const MetricsReport& m) {
  return {{"vaf", m.vaf}, {"mse", m.mse},   {"mae", m.mae},
          {"mmre", m.mmre}, {"rmse", m.rmse}, {"r2", m.r2}};
}

MetricsReport metrics_from_json(const json& j) {
  MetricsReport m;
  m.vaf = j.at("vaf");
  m.mse = j.at("mse");
  m.mae = j.at("mae");
  m.mmre = j.at("mmre");
  m.rmse = j.at("rmse");
  m.r2 = j.at("r2");
  return m;
}

json experiment_to_json(const ExperimentConfig& cfg, const ExperimentReport& report) {
  json j;
  j["config"] = {{"model", model_name(cfg.model.kind)},
                 {"optimizer", optimizer_to_json(cfg.optimizer)},
                 {"runs", cfg.runs},
                 {"master_seed", cfg.master_seed},
                 {"space", space_to_json(cfg.space.dimension() > 0
                                             ? cfg.space
                                             : default_search_space(cfg.model))},
                 {"train_records", cfg.split.train.size()},
                 {"test_records", cfg.split.test.size()}};
  j["result"] = report_body(report);
  j["table"] = fit_table(cfg, report);
  return j;
}

json comparison_to_json(const ExperimentConfig& base, const ComparisonReport& report) {
  json j;
  j["config"] = {{"runs", base.runs},
                 {"master_seed", base.master_seed},
                 {"iterations", std::visit([](const auto& c) { return c.iterations; },
                                           base.optimizer)},
                 {"train_records", base.split.train.size()},
                 {"test_records", base.split.test.size()}};
  json cells = json::object();
  json tables = json::object();
  for (const auto& row : report.cells) {
    for (const auto& cell : row) {
      json c;
      if (cell.report)
        c = report_body(*cell.report);
      else
        c["error"] = cell.error;
      cells[std::string(model_name(cell.model)) + "/" + cell.optimizer] = std::move(c);
    }
  }
  for (ModelKind m : {ModelKind::Basic, ModelKind::ModelI, ModelKind::ModelII})
    tables[model_name(m)] = compare_table(report, m);
  j["cells"] = std::move(cells);
  j["tables"] = std::move(tables);
  return j;
}

std::string fit_trace_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "iteration,best\n";
  for (std::size_t t = 0; t < report.mean_trace.size(); ++t)
    out << (t + 1) << ',' << report.mean_trace[t] << '\n';
  return out.str();
}

std::string compare_trace_csv(const ComparisonReport& report, ModelKind model) {
  const std::array<ComparisonCell, 3>* row = nullptr;
  for (const auto& r : report.cells)
    if (r[0].model == model) row = &r;
  if (!row) throw std::invalid_argument("model not present in comparison");
  std::size_t iters = 0;
  for (const auto& cell : *row)
    if (cell.report) iters = cell.report->mean_trace.size();
  std::ostringstream out;
  out.precision(17);
  out << "iteration,firefly,ga,pso\n";
  for (std::size_t t = 0; t < iters; ++t) {
    out << (t + 1);
    for (const auto& cell : *row) {
      out << ',';
      if (cell.report && t < cell.report->mean_trace.size())
        out << cell.report->mean_trace[t];
    }
    out << '\n';
  }
  return out.str();
}

namespace {

const char* kMetricRows[6] = {"VAF", "MSE", "MAE", "MMRE", "RMSE", "R^2"};

std::string metric_cell(const MetricsReport& m, int row) {
  switch (row) {
    case 0: return fixed2(m.vaf) + "%";
    case 1: return fixed2(m.mse);
    case 2: return fixed2(m.mae);
    case 3: return fixed2(m.mmre);
    case 4: return fixed2(m.rmse);
    default: return fixed2(m.r2);
  }
}

void append_row(std::ostringstream& out, const std::string& head,
                const std::vector<std::string>& cells) {
  out << head;
  for (std::size_t i = head.size(); i < 6; ++i) out << ' ';
  for (const auto& c : cells) {
    out << ' ';
    for (std::size_t i = c.size(); i < 10; ++i) out << ' ';
    out << c;
  }
  out << '\n';
}

} // namespace

std::string fit_table(const ExperimentConfig& cfg, const ExperimentReport& report) {
  std::ostringstream out;
  out << model_name(cfg.model.kind) << " / " << optimizer_name(cfg.optimizer)
      << " (mean of " << report.per_run.size() << " runs)\n";
  append_row(out, "", {"Training", "Testing"});
  for (int r = 0; r < 6; ++r)
    append_row(out, kMetricRows[r],
               {metric_cell(report.mean_train, r), metric_cell(report.mean_test, r)});
  return out.str();
}

std::string compare_table(const ComparisonReport& report, ModelKind model) {
  const std::array<ComparisonCell, 3>* row = nullptr;
  for (const auto& r : report.cells)
    if (r[0].model == model) row = &r;
  if (!row) throw std::invalid_argument("model not present in comparison");
  std::ostringstream out;
  out << model_name(model) << " (mean of runs)\n";
  append_row(out, "",
             {"Training", "", "", "Testing", "", ""});
  append_row(out, "",
             {"Firefly", "GA", "PSO", "Firefly", "GA", "PSO"});
  for (int r = 0; r < 6; ++r) {
    std::vector<std::string> cells;
    for (bool test_side : {false, true})
      for (const auto& cell : *row)
        cells.push_back(cell.report
                            ? metric_cell(test_side ? cell.report->mean_test
                                                    : cell.report->mean_train,
                                          r)
                            : std::string("err"));
    append_row(out, kMetricRows[r], cells);
  }
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error(path + ": cannot open for writing");
  f << content;
  if (!f) throw std::runtime_error(path + ": write failed");
}

} // namespace effortfit
