#include "effortfit/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace effortfit {

namespace {

void check_lengths(const Eigen::VectorXd& a, const Eigen::VectorXd& p) {
  if (a.size() != p.size())
    throw std::invalid_argument("actual/predicted length mismatch: " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(p.size()));
  if (a.size() == 0) throw std::invalid_argument("empty input");
}

double population_variance(const Eigen::VectorXd& v) {
  return (v.array() - v.mean()).square().mean();
}

} // namespace

double mse(const Eigen::VectorXd& actual, const Eigen::VectorXd& predicted) {
  check_lengths(actual, predicted);
  return (actual - predicted).array().square().mean();
}

double mae(const Eigen::VectorXd& actual, const Eigen::VectorXd& predicted) {
  check_lengths(actual, predicted);
  return (actual - predicted).array().abs().mean();
}

double rmse(const Eigen::VectorXd& actual, const Eigen::VectorXd& predicted) {
  return std::sqrt(mse(actual, predicted));
}

double mmre(const Eigen::VectorXd& actual, const Eigen::VectorXd& predicted) {
  check_lengths(actual, predicted);
  for (Eigen::Index i = 0; i < actual.size(); ++i)
    if (actual[i] == 0.0)
      throw std::invalid_argument("actual value at index " + std::to_string(i) +
                                  " is zero");
  return ((actual - predicted).array().abs() / actual.array().abs()).mean();
}

double vaf(const Eigen::VectorXd& actual, const Eigen::VectorXd& predicted) {
  check_lengths(actual, predicted);
  if (actual.size() < 2) throw std::invalid_argument("need at least 2 points");
  double var_y = population_variance(actual);
  if (var_y == 0.0)
    throw std::invalid_argument("actual vector is constant (zero variance)");
  return (1.0 - population_variance(actual - predicted) / var_y) * 100.0;
}

double r_squared(const Eigen::VectorXd& actual, const Eigen::VectorXd& predicted) {
  check_lengths(actual, predicted);
  if (actual.size() < 2) throw std::invalid_argument("need at least 2 points");
  double ss_tot = (actual.array() - actual.mean()).square().sum();
  if (ss_tot == 0.0)
    throw std::invalid_argument("actual vector is constant (zero variance)");
  double ss_res = (actual - predicted).array().square().sum();
  return 1.0 - ss_res / ss_tot;
}

MetricsReport evaluate_vectors(const Eigen::VectorXd& actual,
                               const Eigen::VectorXd& predicted) {
  MetricsReport m;
  m.vaf = vaf(actual, predicted);
  m.mse = mse(actual, predicted);
  m.mae = mae(actual, predicted);
  m.mmre = mmre(actual, predicted);
  m.rmse = rmse(actual, predicted);
  m.r2 = r_squared(actual, predicted);
  return m;
}

MetricsReport evaluate(const ModelSpec& spec, const Eigen::VectorXd& p,
                       const Dataset& d) {
  const auto n = static_cast<Eigen::Index>(d.records.size());
  Eigen::VectorXd actual(n), predicted(n);
  auto preds = predict_all(spec, p, d);
  for (Eigen::Index i = 0; i < n; ++i) {
    actual[i] = d.records[i].effort;
    predicted[i] = preds[i];
  }
  return evaluate_vectors(actual, predicted);
}

} // namespace effortfit
