#pragma once

#include <Eigen/Core>
#include <cmath>
#include <vector>

#include "effortfit/dataset.hpp"

namespace effortfit {

/// The three COCOMO-family effort model forms.
///   Basic:   E = a * KLOC^b
///   ModelI:  E = a * KLOC^b + c * ME
///   ModelII: E = a * KLOC^b + c * ME + d
enum class ModelKind { Basic, ModelI, ModelII };

struct ModelSpec {
  ModelKind kind = ModelKind::Basic;

  int dimension() const {
    switch (kind) {
      case ModelKind::Basic: return 2;
      case ModelKind::ModelI: return 3;
      case ModelKind::ModelII: return 4;
    }
    return 0;
  }
};

/// Coefficient box used by the optimizers. Per-dimension lower < upper.
struct SearchSpace {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  int dimension() const { return static_cast<int>(lower.size()); }
  Eigen::VectorXd range() const { return upper - lower; }
};

/// Core model evaluation with log(KLOC) precomputed. No validity checks;
/// this is the single place the three formulas live.
inline double predict_core(ModelKind kind, const Eigen::VectorXd& p,
                           double log_kloc, double me) {
  double e = p[0] * std::exp(p[1] * log_kloc);
  if (kind != ModelKind::Basic) e += p[2] * me;
  if (kind == ModelKind::ModelII) e += p[3];
  return e;
}

/// Estimated effort in person-months. May be negative (no clamping).
/// Throws on dimension mismatch or a non-finite result.
double predict(const ModelSpec& spec, const Eigen::VectorXd& p,
               const ProjectRecord& r);

/// Elementwise predict over the dataset, in record order.
std::vector<double> predict_all(const ModelSpec& spec, const Eigen::VectorXd& p,
                                const Dataset& d);

/// Default coefficient bounds: a in [0,10], b in [0.01,2], c in [-5,5],
/// d in [-20,20], truncated to the model's dimension.
SearchSpace default_search_space(const ModelSpec& spec);

} // namespace effortfit
