#include "effortfit/models.hpp"

#include <stdexcept>
#include <string>

namespace effortfit {

double predict(const ModelSpec& spec, const Eigen::VectorXd& p,
               const ProjectRecord& r) {
  if (p.size() != spec.dimension())
    throw std::invalid_argument("parameter vector has " +
                                std::to_string(p.size()) + " entries, model needs " +
                                std::to_string(spec.dimension()));
  if (!(r.kloc > 0))
    throw std::invalid_argument("record " + std::to_string(r.id) +
                                ": kloc must be > 0");
  double e = predict_core(spec.kind, p, std::log(r.kloc), r.me);
  if (!std::isfinite(e))
    throw std::runtime_error("record " + std::to_string(r.id) +
                             ": non-finite prediction");
  return e;
}

std::vector<double> predict_all(const ModelSpec& spec, const Eigen::VectorXd& p,
                                const Dataset& d) {
  std::vector<double> out;
  out.reserve(d.records.size());
  for (const auto& r : d.records) out.push_back(predict(spec, p, r));
  return out;
}

SearchSpace default_search_space(const ModelSpec& spec) {
  const int dim = spec.dimension();
  static const double lo[4] = {0.0, 0.01, -5.0, -20.0};
  static const double hi[4] = {10.0, 2.0, 5.0, 20.0};
  SearchSpace s;
  s.lower = Eigen::Map<const Eigen::VectorXd>(lo, dim);
  s.upper = Eigen::Map<const Eigen::VectorXd>(hi, dim);
  return s;
}

} // namespace effortfit
