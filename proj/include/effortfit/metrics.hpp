#pragma once

#include <Eigen/Core>

#include "effortfit/dataset.hpp"
#include "effortfit/models.hpp"

namespace effortfit {

/// The six evaluation measures, computed together.
struct MetricsReport {
  double vaf = 0.0;  // variance-accounted-for, percent
  double mse = 0.0;  // person-months^2
  double mae = 0.0;  // person-months
  double mmre = 0.0; // dimensionless
  double rmse = 0.0; // person-months
  double r2 = 0.0;   // coefficient of determination, may be negative
};

// Each metric is a pure function of (actual, predicted); equal non-zero
// lengths required, further preconditions noted per function.

double mse(const Eigen::VectorXd& actual, const Eigen::VectorXd& predicted);
double mae(const Eigen::VectorXd& actual, const Eigen::VectorXd& predicted);
double rmse(const Eigen::VectorXd& actual, const Eigen::VectorXd& predicted);

/// Mean of |y - yhat| / y. Every actual value must be non-zero.
double mmre(const Eigen::VectorXd& actual, const Eigen::VectorXd& predicted);

/// (1 - var(y - yhat) / var(y)) * 100, population variance. Needs length >= 2
/// and non-constant actual.
double vaf(const Eigen::VectorXd& actual, const Eigen::VectorXd& predicted);

/// 1 - SS_res / SS_tot. Needs length >= 2 and non-constant actual.
double r_squared(const Eigen::VectorXd& actual, const Eigen::VectorXd& predicted);

/// All six metrics of the model's predictions against measured effort.
MetricsReport evaluate(const ModelSpec& spec, const Eigen::VectorXd& p,
                       const Dataset& d);

/// All six metrics of an explicit prediction vector.
MetricsReport evaluate_vectors(const Eigen::VectorXd& actual,
                               const Eigen::VectorXd& predicted);

} // namespace effortfit
