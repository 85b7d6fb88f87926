#include "bd2d/availability.hpp"

#include <cmath>
#include <stdexcept>

namespace bd2d {

Intensity::Intensity(double density_per_m2, double radius_m)
    : density_(density_per_m2), radius_(radius_m) {
  if (density_ < 0.0) {
    throw std::invalid_argument("Intensity: density must be >= 0");
  }
  if (radius_ < 0.0) {
    throw std::invalid_argument("Intensity: radius must be >= 0");
  }
}

Intensity Intensity::from_node_count(double n_nodes, const Area& area,
                                     double radius_m) {
  return Intensity(n_nodes / area.size(), radius_m);
}

double prob_eta_nodes(const Intensity& intensity, int eta) {
  if (eta < 0) {
    throw std::invalid_argument("prob_eta_nodes: eta must be >= 0");
  }
  const double mu = intensity.mu();
  if (mu == 0.0) return eta == 0 ? 1.0 : 0.0;
  if (eta == 0) return std::exp(-mu);
  return std::exp(-mu + eta * std::log(mu) - std::lgamma(eta + 1.0));
}

double availability_analytic(const Intensity& intensity) {
  return 1.0 - prob_eta_nodes(intensity, 0);
}

double availability_per_content(const Intensity& intensity, double q) {
  if (q < 0.0 || q > 1.0) {
    throw std::invalid_argument(
        "availability_per_content: q must be in [0, 1]");
  }
  const double mu_q = intensity.mu() * q;
  if (mu_q == 0.0) return 0.0;
  return 1.0 - std::exp(-mu_q);
}

CachingVector::CachingVector(std::vector<double> values)
    : values_(std::move(values)) {
  for (double v : values_) {
    if (!(v >= 0.0) || !(v <= 1.0)) {
      throw std::invalid_argument("CachingVector: entries must be in [0, 1]");
    }
  }
}

double CachingVector::sum() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s;
}

ObjectiveSpec::ObjectiveSpec(ZipfModel request_pmf, double request_count,
                             Intensity intensity, double capacity_segments)
    : request(std::move(request_pmf)),
      request_count(request_count),
      intensity(intensity),
      capacity_segments(capacity_segments) {
  if (!(request_count >= 1.0)) {
    throw std::invalid_argument("ObjectiveSpec: request count must be >= 1");
  }
  if (capacity_segments < 0.0) {
    throw std::invalid_argument("ObjectiveSpec: capacity must be >= 0");
  }
}

double objective_value(const CachingVector& q, const ObjectiveSpec& spec) {
  if (q.size() != spec.request.catalog_size()) {
    throw std::invalid_argument(
        "objective_value: Q length must match the catalog size");
  }
  const double factor = availability_analytic(spec.intensity);
  double weighted = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    weighted += spec.request.pmf(i + 1) * q[i];
  }
  return factor * weighted / spec.request_count;
}

CachingVector optimize_greedy(const ObjectiveSpec& spec) {
  const std::size_t L = spec.request.catalog_size();
  std::vector<double> q(L, 0.0);
  // Request probabilities are non-increasing in rank, so packing capacity
  // onto the lowest ranks is LP-optimal.
  double remaining = spec.capacity_segments;
  for (std::size_t i = 0; i < L && remaining > 0.0; ++i) {
    const double take = std::min(1.0, remaining);
    q[i] = take;
    remaining -= take;
  }
  return CachingVector(std::move(q));
}

namespace {

struct GridSearch {
  const ObjectiveSpec& spec;
  std::vector<double> levels;
  std::vector<double> current;
  std::vector<double> best;
  double best_value = -1.0;

  void recurse(std::size_t rank, double used, double weighted) {
    const std::size_t L = current.size();
    if (rank == L) {
      if (weighted > best_value) {
        best_value = weighted;
        best = current;
      }
      return;
    }
    for (double level : levels) {
      if (used + level > spec.capacity_segments + 1e-9) break;
      current[rank] = level;
      recurse(rank + 1, used + level,
              weighted + spec.request.pmf(rank + 1) * level);
    }
  }
};

}  // namespace

CachingVector optimize_bruteforce(const ObjectiveSpec& spec,
                                  double grid_step) {
  const std::size_t L = spec.request.catalog_size();
  if (L > 6) {
    throw std::invalid_argument(
        "optimize_bruteforce: catalog size limited to 6 ranks; use "
        "optimize_greedy for larger catalogs");
  }
  if (!(grid_step >= 0.05 && grid_step <= 0.5)) {
    throw std::invalid_argument(
        "optimize_bruteforce: grid_step must be in [0.05, 0.5]");
  }
  GridSearch search{spec, {}, std::vector<double>(L, 0.0), {}, -1.0};
  for (double v = 0.0; v < 1.0 - 1e-12; v += grid_step) {
    search.levels.push_back(v);
  }
  search.levels.push_back(1.0);
  search.recurse(0, 0.0, 0.0);
  // The recursion maximizes the weighted sum; the constant factor and 1/R
  // scaling are applied by objective_value and do not affect the argmax.
  return CachingVector(std::move(search.best));
}

}  // namespace bd2d
