#include "effortfit/optimizers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace effortfit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_setup(const Objective& obj, const SearchSpace& space, int population,
                 int iterations, int min_population) {
  if (obj.dimension != space.dimension())
    throw std::invalid_argument("objective/search-space dimension mismatch");
  if (obj.dimension <= 0) throw std::invalid_argument("dimension must be positive");
  if (!obj.fn) throw std::invalid_argument("objective has no callable");
  if (population < min_population)
    throw std::invalid_argument("population must be >= " +
                                std::to_string(min_population));
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  for (int k = 0; k < space.dimension(); ++k)
    if (!(space.lower[k] < space.upper[k]))
      throw std::invalid_argument("search space needs lower < upper in dimension " +
                                  std::to_string(k));
}

// Non-finite scores become +inf so one bad candidate never wins or aborts.
double score(const Objective& obj, const Eigen::VectorXd& x, std::int64_t& evals) {
  ++evals;
  double v = obj.fn(x);
  return std::isfinite(v) ? v : kInf;
}

Eigen::VectorXd random_point(const SearchSpace& space, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::VectorXd x(space.dimension());
  for (int k = 0; k < space.dimension(); ++k)
    x[k] = space.lower[k] + unit(rng) * (space.upper[k] - space.lower[k]);
  return x;
}

void clamp_to_box(Eigen::VectorXd& x, const SearchSpace& space) {
  x = x.cwiseMax(space.lower).cwiseMin(space.upper);
}

struct BestTracker {
  Eigen::VectorXd position;
  double value = kInf;

  void offer(const Eigen::VectorXd& x, double v) {
    // strict: first-found wins on ties; the first point always lands so a
    // best position exists even when every score is +inf
    if (v < value || position.size() == 0) {
      value = v;
      position = x;
    }
  }
};

} // namespace

double FireflyConfig::effective_alpha_decay() const {
  if (alpha_decay) return *alpha_decay;
  return std::pow(1e-4 / 0.9, 1.0 / iterations);
}

double attractiveness(double r, double beta0, double betamin, double gamma) {
  return betamin + (beta0 - betamin) * std::exp(-gamma * r * r);
}

double distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("distance: dimension mismatch");
  return (x - y).norm();
}

OptimizationResult optimize_firefly(const Objective& obj, const SearchSpace& space,
                                    const FireflyConfig& cfg, std::uint64_t seed) {
  check_setup(obj, space, cfg.population, cfg.iterations, 2);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = cfg.population;
  const Eigen::VectorXd range = space.range();

  OptimizationResult result;
  std::vector<Eigen::VectorXd> pop(n);
  std::vector<double> light(n);
  BestTracker best;
  for (int i = 0; i < n; ++i) {
    pop[i] = random_point(space, rng);
    light[i] = score(obj, pop[i], result.evaluations);
    best.offer(pop[i], light[i]);
  }

  double alpha = cfg.alpha;
  const double decay = cfg.effective_alpha_decay();
  result.trace.reserve(cfg.iterations);

  auto beta_of = [&cfg](double r) {
    if (cfg.kernel == AttractivenessKernel::InverseSquare)
      return cfg.betamin + (cfg.beta0 - cfg.betamin) / (1.0 + cfg.gamma * r * r);
    return attractiveness(r, cfg.beta0, cfg.betamin, cfg.gamma);
  };

  auto random_step = [&](Eigen::VectorXd& x) {
    for (int k = 0; k < x.size(); ++k)
      x[k] += alpha * (unit(rng) - 0.5) * range[k];
  };

  for (int t = 0; t < cfg.iterations; ++t) {
    for (int i = 0; i < n; ++i) {
      const int j_end = cfg.scan == PairScan::LowerTriangular ? i : n;
      for (int j = 0; j < j_end; ++j) {
        if (j == i || !(light[j] < light[i])) continue; // j must be brighter
        const double beta = beta_of(distance(pop[i], pop[j]));
        pop[i] += beta * (pop[j] - pop[i]);
        random_step(pop[i]);
        clamp_to_box(pop[i], space);
        light[i] = score(obj, pop[i], result.evaluations);
        best.offer(pop[i], light[i]);
      }
    }
    // the brightest firefly has no one to follow; it walks randomly
    const int b = static_cast<int>(
        std::min_element(light.begin(), light.end()) - light.begin());
    random_step(pop[b]);
    clamp_to_box(pop[b], space);
    light[b] = score(obj, pop[b], result.evaluations);
    best.offer(pop[b], light[b]);

    alpha *= decay;
    result.trace.push_back(best.value);
  }

  result.best_position = best.position;
  result.best_score = best.value;
  return result;
}

OptimizationResult optimize_ga(const Objective& obj, const SearchSpace& space,
                               const GaConfig& cfg, std::uint64_t seed) {
  check_setup(obj, space, cfg.population, cfg.iterations, 2);
  if (cfg.elitism_count < 0 || cfg.elitism_count >= cfg.population)
    throw std::invalid_argument("elitism_count must be in [0, population)");
  if (cfg.tournament_size < 1)
    throw std::invalid_argument("tournament_size must be >= 1");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int n = cfg.population;
  const Eigen::VectorXd range = space.range();
  const Eigen::VectorXd sigma = cfg.mutation_sigma_fraction * range;

  OptimizationResult result;
  std::vector<Eigen::VectorXd> pop(n);
  std::vector<double> fit(n);
  BestTracker best;
  for (int i = 0; i < n; ++i) {
    pop[i] = random_point(space, rng);
    fit[i] = score(obj, pop[i], result.evaluations);
    best.offer(pop[i], fit[i]);
  }

  std::uniform_int_distribution<int> pick(0, n - 1);
  auto tournament = [&]() {
    int winner = pick(rng);
    for (int k = 1; k < cfg.tournament_size; ++k) {
      int challenger = pick(rng);
      if (fit[challenger] < fit[winner]) winner = challenger;
    }
    return winner;
  };

  auto mutate = [&](Eigen::VectorXd& x) {
    for (int k = 0; k < x.size(); ++k)
      if (unit(rng) < cfg.mutation_probability) x[k] += sigma[k] * gauss(rng);
  };

  std::vector<Eigen::VectorXd> offspring(n);
  std::vector<double> offspring_fit(n);
  result.trace.reserve(cfg.iterations);

  for (int t = 0; t < cfg.iterations; ++t) {
    // elites of the current generation, best first
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return fit[a] < fit[b]; });

    for (int i = 0; i < n; i += 2) {
      const Eigen::VectorXd& p1 = pop[tournament()];
      const Eigen::VectorXd& p2 = pop[tournament()];
      Eigen::VectorXd c1 = p1, c2 = p2;
      if (unit(rng) < cfg.crossover_probability) {
        const double lambda = unit(rng);
        c1 = lambda * p1 + (1.0 - lambda) * p2;
        c2 = (1.0 - lambda) * p1 + lambda * p2;
      }
      mutate(c1);
      mutate(c2);
      clamp_to_box(c1, space);
      clamp_to_box(c2, space);
      offspring[i] = std::move(c1);
      if (i + 1 < n) offspring[i + 1] = std::move(c2);
    }
    for (int i = 0; i < n; ++i) {
      offspring_fit[i] = score(obj, offspring[i], result.evaluations);
      best.offer(offspring[i], offspring_fit[i]);
    }

    // generational replacement; elites overwrite the worst offspring
    if (cfg.elitism_count > 0) {
      std::vector<int> worst(n);
      std::iota(worst.begin(), worst.end(), 0);
      std::stable_sort(worst.begin(), worst.end(), [&](int a, int b) {
        return offspring_fit[a] > offspring_fit[b];
      });
      for (int e = 0; e < cfg.elitism_count; ++e) {
        offspring[worst[e]] = pop[order[e]];
        offspring_fit[worst[e]] = fit[order[e]];
      }
    }
    pop.swap(offspring);
    fit.swap(offspring_fit);
    result.trace.push_back(best.value);
  }

  result.best_position = best.position;
  result.best_score = best.value;
  return result;
}

OptimizationResult optimize_pso(const Objective& obj, const SearchSpace& space,
                                const PsoConfig& cfg, std::uint64_t seed) {
  check_setup(obj, space, cfg.population, cfg.iterations, 1);
  if (!(cfg.inertia_start >= cfg.inertia_end))
    throw std::invalid_argument("inertia_start must be >= inertia_end");
  if (!(cfg.c1 > 0) || !(cfg.c2 > 0))
    throw std::invalid_argument("acceleration constants must be > 0");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = cfg.population;
  const int dim = space.dimension();
  const Eigen::VectorXd vmax =
      space.range().cwiseMin(Eigen::VectorXd::Constant(dim, cfg.max_velocity));

  OptimizationResult result;
  std::vector<Eigen::VectorXd> x(n), v(n), pbest(n);
  std::vector<double> pscore(n);
  BestTracker gbest;
  for (int i = 0; i < n; ++i) {
    x[i] = random_point(space, rng);
    v[i] = Eigen::VectorXd::Zero(dim);
    pscore[i] = score(obj, x[i], result.evaluations);
    pbest[i] = x[i];
    gbest.offer(x[i], pscore[i]);
  }

  result.trace.reserve(cfg.iterations);
  for (int t = 0; t < cfg.iterations; ++t) {
    const double w =
        cfg.iterations > 1
            ? cfg.inertia_start + (cfg.inertia_end - cfg.inertia_start) * t /
                                      (cfg.iterations - 1)
            : cfg.inertia_start;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < dim; ++k) {
        v[i][k] = w * v[i][k] + cfg.c1 * unit(rng) * (pbest[i][k] - x[i][k]) +
                  cfg.c2 * unit(rng) * (gbest.position[k] - x[i][k]);
        v[i][k] = std::clamp(v[i][k], -vmax[k], vmax[k]);
      }
      x[i] += v[i];
      clamp_to_box(x[i], space);
      const double s = score(obj, x[i], result.evaluations);
      if (s < pscore[i]) {
        pscore[i] = s;
        pbest[i] = x[i];
      }
      gbest.offer(x[i], s);
    }
    result.trace.push_back(gbest.value);
  }

  result.best_position = gbest.position;
  result.best_score = gbest.value;
  return result;
}

} // namespace effortfit
