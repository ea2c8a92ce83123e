// Acceptance suite: runs the full 25-run evaluation protocol on the NASA
// dataset and checks the toolkit against an independent grid-search oracle
// plus deterministic property checks. Prints one line per criterion.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <thread>
#include <vector>

#include "effortfit/harness.hpp"
#include "effortfit/report_io.hpp"

#include <nlohmann/json.hpp>

using namespace effortfit;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("%s  criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion,
              detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

// Independent oracle: exhaustive grid search of the Basic model's training
// MAE. Shares nothing with the optimizer path.
struct GridResult {
  double a = 0, b = 0, mae = 0;
};

GridResult grid_search_basic(const Dataset& train) {
  const std::size_t n = train.records.size();
  std::vector<double> log_kloc(n), effort(n);
  for (std::size_t i = 0; i < n; ++i) {
    log_kloc[i] = std::log(train.records[i].kloc);
    effort[i] = train.records[i].effort;
  }
  GridResult best;
  best.mae = 1e300;
  std::vector<double> powk(n);
  for (int bi = 0; bi <= 1990; ++bi) {
    const double b = 0.01 + 0.001 * bi;
    for (std::size_t i = 0; i < n; ++i) powk[i] = std::exp(b * log_kloc[i]);
    for (int ai = 0; ai <= 2000; ++ai) {
      const double a = 0.005 * ai;
      double sum = 0;
      for (std::size_t i = 0; i < n; ++i) sum += std::abs(effort[i] - a * powk[i]);
      const double m = sum / static_cast<double>(n);
      if (m < best.mae) best = {a, b, m};
    }
  }
  return best;
}

ExperimentReport run_cell(ModelKind model, const OptimizerConfig& opt,
                          const SplitDataset& split) {
  ExperimentConfig cfg;
  cfg.model = {model};
  cfg.optimizer = opt;
  cfg.runs = 25;
  cfg.master_seed = 2015;
  cfg.split = split;
  cfg.jobs = worker_count();
  return run_experiment(cfg);
}

bool non_increasing(const std::vector<double>& t) {
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i] > t[i - 1]) return false;
  return true;
}

} // namespace

int main() {
  const SplitDataset split = split_fixed(nasa_dataset(), 13);

  // 1. grid-search oracle for the Basic model on the training split
  const GridResult grid = grid_search_basic(split.train);
  {
    const SearchSpace box = default_search_space({ModelKind::Basic});
    const bool interior = grid.a > box.lower[0] && grid.a < box.upper[0] &&
                          grid.b > box.lower[1] && grid.b < box.upper[1];
    report(1, grid.mae <= 7.2 && interior,
           "grid oracle MAE " + fmt(grid.mae) + " at a=" + fmt(grid.a) +
               ", b=" + fmt(grid.b) +
               (interior ? ", interior to the default box" : ", ON BOX EDGE"));
  }

  // 2. Basic + Firefly, 25 x 500
  const ExperimentReport basic_fa = run_cell(ModelKind::Basic, FireflyConfig{}, split);
  {
    const double train_mae = basic_fa.mean_train.mae;
    const double test_mae = basic_fa.mean_test.mae;
    const double test_r2 = basic_fa.mean_test.r2;
    const bool ok = std::abs(train_mae - 7.04) <= 0.5 &&
                    train_mae <= 1.02 * grid.mae &&
                    std::abs(test_mae - 5.65) <= 1.0 && test_r2 >= 0.97;
    report(2, ok,
           "basic/firefly train MAE " + fmt(train_mae) + " (target 7.04±0.5, ≤" +
               fmt(1.02 * grid.mae) + "), test MAE " + fmt(test_mae) +
               " (5.65±1.0), test R² " + fmt(test_r2) + " (≥0.97)");
  }

  // 3. Basic + GA and PSO
  const ExperimentReport basic_ga = run_cell(ModelKind::Basic, GaConfig{}, split);
  const ExperimentReport basic_pso = run_cell(ModelKind::Basic, PsoConfig{}, split);
  report(3,
         std::abs(basic_ga.mean_train.mae - 7.03) <= 0.5 &&
             std::abs(basic_pso.mean_train.mae - 7.03) <= 0.5,
         "basic train MAE: ga " + fmt(basic_ga.mean_train.mae) + ", pso " +
             fmt(basic_pso.mean_train.mae) + " (each 7.03±0.5)");

  // 4. Model I + Firefly; Model II + PSO
  const ExperimentReport m1_fa = run_cell(ModelKind::ModelI, FireflyConfig{}, split);
  const ExperimentReport m2_pso = run_cell(ModelKind::ModelII, PsoConfig{}, split);
  report(4,
         m1_fa.mean_test.r2 >= 0.97 && m1_fa.mean_train.mse <= 80.0 &&
             m2_pso.mean_test.mmre <= 0.30,
         "model1/firefly test R² " + fmt(m1_fa.mean_test.r2) +
             " (≥0.97), train MSE " + fmt(m1_fa.mean_train.mse) +
             " (≤80); model2/pso test MMRE " + fmt(m2_pso.mean_test.mmre) +
             " (≤0.30)");

  // 5. ordering: GA converges slowest on Model I
  const ExperimentReport m1_ga = run_cell(ModelKind::ModelI, GaConfig{}, split);
  const ExperimentReport m1_pso = run_cell(ModelKind::ModelI, PsoConfig{}, split);
  report(5,
         m1_ga.mean_train.mse > m1_fa.mean_train.mse &&
             m1_ga.mean_train.mse > m1_pso.mean_train.mse,
         "model1 train MSE: ga " + fmt(m1_ga.mean_train.mse) + " vs firefly " +
             fmt(m1_fa.mean_train.mse) + " and pso " + fmt(m1_pso.mean_train.mse));

  // 6. deterministic property suite
  {
    bool ok = true;
    std::string why;

    // trace monotonicity + containment on 50 random objectives
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-1, 1);
    bool contained = true;
    for (int trial = 0; trial < 50 && ok; ++trial) {
      const int dim = 1 + trial % 4;
      SearchSpace s;
      s.lower = Eigen::VectorXd::Constant(dim, -2.0 + u(rng));
      s.upper = Eigen::VectorXd::Constant(dim, 2.0 + u(rng));
      Eigen::VectorXd center(dim);
      for (int k = 0; k < dim; ++k) center[k] = u(rng);
      const double wiggle = u(rng);
      SearchSpace s_copy = s;
      Objective obj{dim, [&contained, s_copy, center, wiggle](const Eigen::VectorXd& x) {
                      if (((x.array() < s_copy.lower.array()) ||
                           (x.array() > s_copy.upper.array()))
                              .any())
                        contained = false;
                      return (x - center).squaredNorm() +
                             wiggle * std::cos(4.0 * x.sum());
                    }};
      FireflyConfig fa;
      fa.iterations = 25;
      fa.population = 8;
      GaConfig ga;
      ga.iterations = 25;
      ga.population = 8;
      PsoConfig pso;
      pso.iterations = 25;
      pso.population = 8;
      const std::uint64_t seed = 4000 + trial;
      for (const auto& r : {optimize_firefly(obj, s, fa, seed),
                            optimize_ga(obj, s, ga, seed),
                            optimize_pso(obj, s, pso, seed)}) {
        if (!non_increasing(r.trace)) {
          ok = false;
          why = "trace not monotone";
        }
      }
    }
    if (ok && !contained) {
      ok = false;
      why = "point escaped the box";
    }

    // bit-identical repeated seeded invocation, serialized and parsed back
    if (ok) {
      ExperimentConfig cfg;
      cfg.model = {ModelKind::ModelII};
      FireflyConfig fa;
      fa.iterations = 15;
      fa.population = 8;
      cfg.optimizer = fa;
      cfg.runs = 3;
      cfg.master_seed = 77;
      cfg.split = split;
      nlohmann::json a = experiment_to_json(cfg, run_experiment(cfg));
      nlohmann::json b = experiment_to_json(cfg, run_experiment(cfg));
      if (a.dump() != b.dump()) {
        ok = false;
        why = "repeated invocation not bit-identical";
      }
    }

    // rmse^2 == mse on 1000 random pairs
    if (ok) {
      std::mt19937_64 mrng(7);
      std::uniform_real_distribution<double> mu(0.1, 200.0);
      std::uniform_int_distribution<int> len(1, 40);
      for (int trial = 0; trial < 1000 && ok; ++trial) {
        const int n = len(mrng);
        Eigen::VectorXd y(n), p(n);
        for (int i = 0; i < n; ++i) {
          y[i] = mu(mrng);
          p[i] = mu(mrng) - 100.0;
        }
        const double r = rmse(y, p), m = mse(y, p);
        if (std::abs(r * r - m) > 1e-9 * std::max(1.0, std::abs(m))) {
          ok = false;
          why = "rmse^2 != mse";
        }
      }
    }

    // reduction identities on the full dataset
    if (ok) {
      const Dataset d = nasa_dataset();
      std::mt19937_64 prng(13);
      std::uniform_real_distribution<double> pu(-2.0, 2.0);
      for (int trial = 0; trial < 100 && ok; ++trial) {
        Eigen::VectorXd p4(4);
        p4 << std::abs(pu(prng)) + 0.1, std::abs(pu(prng)) * 0.5 + 0.05, pu(prng),
            0.0;
        Eigen::VectorXd p3 = p4.head(3), p2 = p4.head(2);
        for (const auto& r : d.records) {
          if (predict({ModelKind::ModelII}, p4, r) !=
              predict({ModelKind::ModelI}, p3, r)) {
            ok = false;
            why = "model2 -> model1 reduction differs";
          }
        }
        Eigen::VectorXd p3z = p3;
        p3z[2] = 0.0;
        for (const auto& r : d.records) {
          if (predict({ModelKind::ModelI}, p3z, r) !=
              predict({ModelKind::Basic}, p2, r)) {
            ok = false;
            why = "model1 -> basic reduction differs";
          }
        }
      }
    }

    // perfect prediction scores (100%, 0, 0, 0, 0, 1)
    if (ok) {
      Eigen::VectorXd y(5);
      y << 5, 8.4, 98.7, 15.6, 23.9;
      MetricsReport m = evaluate_vectors(y, y);
      if (!(m.vaf == 100.0 && m.mse == 0.0 && m.mae == 0.0 && m.mmre == 0.0 &&
            m.rmse == 0.0 && m.r2 == 1.0)) {
        ok = false;
        why = "perfect-prediction metrics off";
      }
    }

    report(6, ok, ok ? "monotone traces, containment, bit-identical reports, "
                       "rmse²==mse, reduction identities, perfect-fit metrics"
                     : why);
  }

  // 7. metric and attractiveness spot values
  {
    Eigen::VectorXd z2(2), pm(2), ten(1), eleven(1);
    z2 << 0, 0;
    pm << 1, -1;
    ten << 10;
    eleven << 11;
    Eigen::VectorXd y(4), y5(4);
    y << 10, 20, 35, 5;
    y5 = y.array() + 5;
    const bool ok = std::abs(mae(z2, pm) - 1.0) < 1e-12 &&
                    std::abs(mmre(ten, eleven) - 0.1) < 1e-12 &&
                    std::abs(vaf(y, y5) - 100.0) < 1e-9 &&
                    std::abs(attractiveness(1.0, 1.0, 0.0, 0.4) - std::exp(-0.4)) <
                        1e-12 &&
                    std::abs(attractiveness(1.0, 1.0, 0.0, 0.4) - 0.6703) < 1e-4;
    report(7, ok, "mae/mmre/vaf/attractiveness spot values");
  }

  // 8. sphere sanity: < 1e-2 in at least 24 of 25 seeded runs per optimizer
  {
    SearchSpace s;
    s.lower = Eigen::VectorXd::Constant(2, -5.0);
    s.upper = Eigen::VectorXd::Constant(2, 5.0);
    Objective obj{2, [](const Eigen::VectorXd& x) { return x.squaredNorm(); }};
    int hits[3] = {0, 0, 0};
    for (int k = 0; k < 25; ++k) {
      const std::uint64_t seed = derive_run_seed(606, k);
      if (optimize_firefly(obj, s, FireflyConfig{}, seed).best_score < 1e-2)
        ++hits[0];
      if (optimize_ga(obj, s, GaConfig{}, seed).best_score < 1e-2) ++hits[1];
      if (optimize_pso(obj, s, PsoConfig{}, seed).best_score < 1e-2) ++hits[2];
    }
    report(8, hits[0] >= 24 && hits[1] >= 24 && hits[2] >= 24,
           "sphere runs under 1e-2: firefly " + std::to_string(hits[0]) +
               "/25, ga " + std::to_string(hits[1]) + "/25, pso " +
               std::to_string(hits[2]) + "/25");
  }

  if (failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
