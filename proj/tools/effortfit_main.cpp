#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "effortfit/report_io.hpp"

namespace fs = std::filesystem;
using namespace effortfit;

namespace {

struct CommonOpts {
  std::string data;
  int runs = 25;
  int iters = 500;
  std::uint64_t seed = 0;
  int train_count = 13;
  std::vector<double> lower, upper;
  int jobs = 1;
  std::string out = ".";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--data", o.data, "input CSV (default: built-in NASA dataset)");
  cmd->add_option("--runs", o.runs, "seeded runs per experiment")->default_val(25);
  cmd->add_option("--iters", o.iters, "optimizer iterations")->default_val(500);
  cmd->add_option("--seed", o.seed, "master seed")->default_val(0);
  cmd->add_option("--train-count", o.train_count, "records in the training split")
      ->default_val(13);
  cmd->add_option("--lower", o.lower, "coefficient lower bounds")->delimiter(',');
  cmd->add_option("--upper", o.upper, "coefficient upper bounds")->delimiter(',');
  cmd->add_option("--jobs", o.jobs, "worker threads across runs")->default_val(1);
  cmd->add_option("--out", o.out, "output directory")->default_val(".");
}

ModelSpec parse_model(const std::string& name) {
  if (name == "basic") return {ModelKind::Basic};
  if (name == "model1") return {ModelKind::ModelI};
  if (name == "model2") return {ModelKind::ModelII};
  throw CLI::ValidationError("--model", "expected basic, model1 or model2");
}

OptimizerConfig parse_optimizer(const std::string& name, int iters) {
  if (name == "firefly") {
    FireflyConfig c;
    c.iterations = iters;
    return c;
  }
  if (name == "ga") {
    GaConfig c;
    c.iterations = iters;
    return c;
  }
  if (name == "pso") {
    PsoConfig c;
    c.iterations = iters;
    return c;
  }
  throw CLI::ValidationError("--optimizer", "expected firefly, ga or pso");
}

ExperimentConfig build_config(const CommonOpts& o, const ModelSpec& model,
                              const OptimizerConfig& opt) {
  ExperimentConfig cfg;
  cfg.model = model;
  cfg.optimizer = opt;
  cfg.runs = o.runs;
  cfg.master_seed = o.seed;
  cfg.jobs = o.jobs;
  Dataset d = o.data.empty() ? nasa_dataset() : load_csv(o.data);
  cfg.split = split_fixed(d, static_cast<std::size_t>(o.train_count));
  if (!o.lower.empty() || !o.upper.empty()) {
    SearchSpace def = default_search_space(model);
    if (!o.lower.empty()) {
      if (static_cast<int>(o.lower.size()) != model.dimension())
        throw std::runtime_error("--lower needs " +
                                 std::to_string(model.dimension()) + " values");
      def.lower = Eigen::Map<const Eigen::VectorXd>(o.lower.data(), o.lower.size());
    }
    if (!o.upper.empty()) {
      if (static_cast<int>(o.upper.size()) != model.dimension())
        throw std::runtime_error("--upper needs " +
                                 std::to_string(model.dimension()) + " values");
      def.upper = Eigen::Map<const Eigen::VectorXd>(o.upper.data(), o.upper.size());
    }
    cfg.space = def;
  }
  return cfg;
}

void ensure_out_dir(const std::string& out) {
  if (!out.empty() && out != ".") fs::create_directories(out);
}

int run_fit(const CommonOpts& o, const std::string& model_name_arg,
            const std::string& optimizer_name_arg) {
  ExperimentConfig cfg = build_config(o, parse_model(model_name_arg),
                                      parse_optimizer(optimizer_name_arg, o.iters));
  ExperimentReport report = run_experiment(cfg);

  ensure_out_dir(o.out);
  fs::path dir(o.out);
  write_text_file((dir / "report.json").string(),
                  experiment_to_json(cfg, report).dump(2) + "\n");
  write_text_file((dir / "trace.csv").string(), fit_trace_csv(report));
  std::string table = fit_table(cfg, report);
  write_text_file((dir / "table.txt").string(), table);
  std::cout << table;
  return 0;
}

int run_compare(const CommonOpts& o) {
  FireflyConfig fa;
  fa.iterations = o.iters;
  ExperimentConfig base = build_config(o, ModelSpec{ModelKind::Basic}, fa);
  ComparisonReport report = compare_all(base);

  ensure_out_dir(o.out);
  fs::path dir(o.out);
  write_text_file((dir / "report.json").string(),
                  comparison_to_json(base, report).dump(2) + "\n");
  for (ModelKind m : {ModelKind::Basic, ModelKind::ModelI, ModelKind::ModelII}) {
    std::string stem = model_name(m);
    write_text_file((dir / ("table_" + stem + ".txt")).string(),
                    compare_table(report, m));
    write_text_file((dir / ("trace_" + stem + ".csv")).string(),
                    compare_trace_csv(report, m));
  }
  bool any_error = false;
  for (const auto& row : report.cells)
    for (const auto& cell : row)
      if (!cell.report) {
        std::cerr << model_name(cell.model) << "/" << cell.optimizer << ": "
                  << cell.error << "\n";
        any_error = true;
      }
  for (ModelKind m : {ModelKind::Basic, ModelKind::ModelI, ModelKind::ModelII})
    std::cout << compare_table(report, m) << "\n";
  return any_error ? 1 : 0;
}

int run_predict(const std::string& model_name_arg, const std::vector<double>& coeffs,
                const std::string& data) {
  ModelSpec model = parse_model(model_name_arg);
  if (static_cast<int>(coeffs.size()) != model.dimension())
    throw std::runtime_error("model " + model_name_arg + " needs " +
                             std::to_string(model.dimension()) +
                             " coefficients, got " + std::to_string(coeffs.size()));
  Eigen::VectorXd p =
      Eigen::Map<const Eigen::VectorXd>(coeffs.data(), coeffs.size());
  Dataset d = data.empty() ? nasa_dataset() : load_csv(data);

  auto preds = predict_all(model, p, d);
  std::printf("%4s %10s %12s %12s\n", "id", "kloc", "predicted", "actual");
  for (std::size_t i = 0; i < d.records.size(); ++i)
    std::printf("%4d %10.2f %12.2f %12.2f\n", d.records[i].id, d.records[i].kloc,
                preds[i], d.records[i].effort);

  MetricsReport m = evaluate(model, p, d);
  std::printf("\nVAF %.2f%%  MSE %.2f  MAE %.2f  MMRE %.2f  RMSE %.2f  R^2 %.2f\n",
              m.vaf, m.mse, m.mae, m.mmre, m.rmse, m.r2);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"COCOMO-family effort model fitting with FA, GA and PSO"};
  app.require_subcommand(1);

  CommonOpts fit_opts;
  std::string fit_model, fit_optimizer;
  CLI::App* fit = app.add_subcommand("fit", "fit one model with one optimizer");
  fit->add_option("--model", fit_model, "basic, model1 or model2")->required();
  fit->add_option("--optimizer", fit_optimizer, "firefly, ga or pso")->required();
  add_common(fit, fit_opts);

  CommonOpts cmp_opts;
  CLI::App* compare =
      app.add_subcommand("compare", "run the full 3x3 model/optimizer grid");
  add_common(compare, cmp_opts);

  std::string pred_model, pred_data;
  std::vector<double> pred_coeffs;
  CLI::App* predict =
      app.add_subcommand("predict", "evaluate explicit coefficients on a dataset");
  predict->add_option("--model", pred_model, "basic, model1 or model2")->required();
  predict->add_option("--coeffs", pred_coeffs, "coefficients a,b[,c[,d]]")
      ->required()
      ->delimiter(',');
  predict->add_option("--data", pred_data, "input CSV (default: NASA dataset)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fit->parsed()) return run_fit(fit_opts, fit_model, fit_optimizer);
    if (compare->parsed()) return run_compare(cmp_opts);
    if (predict->parsed()) return run_predict(pred_model, pred_coeffs, pred_data);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
