#pragma once

#include <cstddef>
#include <vector>

#include "bd2d/popularity.hpp"
#include "bd2d/spatial.hpp"

namespace bd2d {

inline constexpr double kPi = 3.14159265358979323846;

// Poisson intensity of the neighborhood disk: density (nodes per m^2) and
// radius (m), with exponent mu = density * pi * radius^2.
class Intensity {
 public:
  Intensity(double density_per_m2, double radius_m);

  static Intensity from_node_count(double n_nodes, const Area& area,
                                   double radius_m);

  double density() const { return density_; }
  double radius() const { return radius_; }
  double mu() const { return density_ * kPi * (radius_ * radius_); }

 private:
  double density_;
  double radius_;
};

// P(exactly eta nodes within the disk) = e^-mu mu^eta / eta!, evaluated in
// log space so large mu and eta stay finite.
double prob_eta_nodes(const Intensity& intensity, int eta);

// P(at least one node within the disk) = 1 - e^-mu, computed as
// 1 - prob_eta_nodes(intensity, 0) so the two agree exactly.
double availability_analytic(const Intensity& intensity);

// Thinned variant: only a fraction q of nodes hold the content, so the
// serving population is a Poisson process of intensity mu * q.
double availability_per_content(const Intensity& intensity, double q);

// Per-rank caching probabilities Q_1..Q_L, each in [0, 1].
class CachingVector {
 public:
  explicit CachingVector(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double sum() const;

 private:
  std::vector<double> values_;
};

// Inputs of the placement objective: request distribution, request count R,
// neighborhood intensity, and cache capacity in segments.
struct ObjectiveSpec {
  ObjectiveSpec(ZipfModel request_pmf, double request_count,
                Intensity intensity, double capacity_segments);

  ZipfModel request;
  double request_count;
  Intensity intensity;
  double capacity_segments;
};

// (1/R) sum_i (1 - e^-mu) P_r(i) Q_i, taken literally: the availability
// factor uses the total density and is constant across ranks.
double objective_value(const CachingVector& q, const ObjectiveSpec& spec);

// Exact maximizer of the linear objective under sum Q <= C and 0 <= Q <= 1:
// ones on the floor(C) most-requested ranks, the fractional remainder on the
// next, zeros elsewhere.
CachingVector optimize_greedy(const ObjectiveSpec& spec);

// Exhaustive search over the grid Q_i in {0, step, 2*step, ..., 1} subject
// to sum Q <= C. Guarded to catalogs of at most 6 ranks.
CachingVector optimize_bruteforce(const ObjectiveSpec& spec, double grid_step);

}  // namespace bd2d
