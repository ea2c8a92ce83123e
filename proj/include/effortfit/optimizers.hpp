#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "effortfit/models.hpp"

namespace effortfit {

/// Minimization objective over a bounded box. fn must be deterministic for a
/// fixed input vector; non-finite values are treated as +inf by the optimizers.
struct Objective {
  int dimension = 0;
  std::function<double(const Eigen::VectorXd&)> fn;
};

/// Attractiveness kernel: Gaussian exp(-gamma r^2) is the default; the
/// inverse-square 1/(1 + gamma r^2) form is selectable.
enum class AttractivenessKernel { Gaussian, InverseSquare };

/// Pairwise scan order of the firefly inner loop.
enum class PairScan { LowerTriangular, AllPairs };

struct FireflyConfig {
  int iterations = 500;
  int population = 100; // >= 2
  double alpha = 0.4;   // randomness weight, decayed geometrically
  double betamin = 1.0;
  double beta0 = 1.0;
  double gamma = 0.4;
  // Geometric per-iteration alpha factor; when unset, chosen so alpha shrinks
  // by 1e-4/0.9 over the full iteration budget.
  std::optional<double> alpha_decay;
  AttractivenessKernel kernel = AttractivenessKernel::Gaussian;
  PairScan scan = PairScan::LowerTriangular;

  double effective_alpha_decay() const;
};

struct GaConfig {
  int iterations = 500;
  int population = 100;
  int tournament_size = 2;
  double crossover_probability = 0.80;
  double mutation_probability = 0.05; // per gene
  double mutation_sigma_fraction = 0.10; // of per-dimension range
  int elitism_count = 1; // < population
};

struct PsoConfig {
  int iterations = 500;
  int population = 100;
  double c1 = 2.1;
  double c2 = 2.1;
  double inertia_start = 0.9;
  double inertia_end = 0.6;
  double max_velocity = 100.0; // further clamped to the per-dimension range
};

struct OptimizationResult {
  Eigen::VectorXd best_position;
  double best_score = 0.0;
  std::vector<double> trace; // best-so-far after each iteration, non-increasing
  std::int64_t evaluations = 0;
};

/// betamin + (beta0 - betamin) * exp(-gamma r^2)
double attractiveness(double r, double beta0, double betamin, double gamma);

/// Euclidean distance between two equally sized vectors.
double distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// The three optimizers. Identical (objective, space, config, seed) give
// bit-identical results; every evaluated point lies inside the box.

OptimizationResult optimize_firefly(const Objective& obj, const SearchSpace& space,
                                    const FireflyConfig& cfg, std::uint64_t seed);

OptimizationResult optimize_ga(const Objective& obj, const SearchSpace& space,
                               const GaConfig& cfg, std::uint64_t seed);

OptimizationResult optimize_pso(const Objective& obj, const SearchSpace& space,
                                const PsoConfig& cfg, std::uint64_t seed);

} // namespace effortfit
