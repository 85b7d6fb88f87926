#include "bd2d/clustering.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace bd2d {

namespace {

constexpr int kUnclassified = -2;

void check_dbscan_args(double epsilon, int min_bsn) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("dbscan: epsilon must be positive");
  }
  if (min_bsn < 2) {
    throw std::invalid_argument("dbscan: min_bsn must be at least 2");
  }
}

// Seed-queue expansion shared by both variants; `neighbors(i)` returns the
// epsilon-neighborhood of node i excluding i itself, sorted ascending.
template <typename NeighborFn>
Clustering expand_clusters(std::size_t n, int min_bsn,
                           NeighborFn&& neighbors) {
  Clustering out;
  out.labels.assign(n, kUnclassified);
  std::deque<std::size_t> seeds;
  for (std::size_t i = 0; i < n; ++i) {
    if (out.labels[i] != kUnclassified) continue;
    std::vector<std::size_t> nbrs = neighbors(i);
    if (nbrs.size() + 1 < static_cast<std::size_t>(min_bsn)) {
      out.labels[i] = Clustering::kNoise;
      continue;
    }
    const int cid = out.kappa++;
    out.labels[i] = cid;
    seeds.assign(nbrs.begin(), nbrs.end());
    while (!seeds.empty()) {
      const std::size_t j = seeds.front();
      seeds.pop_front();
      if (out.labels[j] == Clustering::kNoise) {
        out.labels[j] = cid;  // border point
        continue;
      }
      if (out.labels[j] != kUnclassified) continue;
      out.labels[j] = cid;
      std::vector<std::size_t> jn = neighbors(j);
      if (jn.size() + 1 >= static_cast<std::size_t>(min_bsn)) {
        seeds.insert(seeds.end(), jn.begin(), jn.end());
      }
    }
  }
  return out;
}

}  // namespace

int Clustering::noise_count() const {
  return static_cast<int>(std::count(labels.begin(), labels.end(), kNoise));
}

Clustering dbscan(const PointSet& points, const NeighborIndex& index,
                  double epsilon, int min_bsn) {
  check_dbscan_args(epsilon, min_bsn);
  if (epsilon > index.radius()) {
    throw std::invalid_argument("dbscan: epsilon exceeds index radius");
  }
  return expand_clusters(points.size(), min_bsn, [&](std::size_t i) {
    return index.neighbors_within(i, epsilon);
  });
}

Clustering dbscan_reference(const PointSet& points, double epsilon,
                            int min_bsn) {
  check_dbscan_args(epsilon, min_bsn);
  const double eps2 = epsilon * epsilon;
  const std::size_t n = points.size();
  return expand_clusters(n, min_bsn, [&](std::size_t i) {
    std::vector<std::size_t> nbrs;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && squared_distance(points[i], points[j]) <= eps2) {
        nbrs.push_back(j);
      }
    }
    return nbrs;
  });
}

EpsilonSweepResult sweep_epsilon(std::size_t n_nodes, const Area& area,
                                 const std::vector<double>& eps_list,
                                 int min_bsn, int replications,
                                 std::uint64_t base_seed) {
  if (eps_list.empty()) {
    throw std::invalid_argument("sweep_epsilon: eps_list must be non-empty");
  }
  if (!std::is_sorted(eps_list.begin(), eps_list.end())) {
    throw std::invalid_argument("sweep_epsilon: eps_list must be ascending");
  }
  if (!(eps_list.front() > 0.0)) {
    throw std::invalid_argument("sweep_epsilon: epsilon must be positive");
  }
  if (replications < 1) {
    throw std::invalid_argument("sweep_epsilon: replications must be >= 1");
  }

  EpsilonSweepResult result;
  result.cells.reserve(eps_list.size() * static_cast<std::size_t>(replications));
  std::vector<double> sum_clusters(eps_list.size(), 0.0);
  std::vector<double> sum_outliers(eps_list.size(), 0.0);

  for (int rep = 0; rep < replications; ++rep) {
    Rng rng = make_rng(base_seed, static_cast<std::uint64_t>(rep));
    const PointSet ps = generate_uniform(n_nodes, area, rng);
    // One index at the largest radius serves every epsilon in the list.
    const NeighborIndex index(ps, eps_list.back());
    for (std::size_t e = 0; e < eps_list.size(); ++e) {
      const Clustering c = dbscan(ps, index, eps_list[e], min_bsn);
      const int outliers = c.noise_count();
      result.cells.push_back(
          EpsilonSweepCell{eps_list[e], rep, c.kappa, outliers});
      sum_clusters[e] += c.kappa;
      sum_outliers[e] += outliers;
    }
  }

  // cells are produced replication-major; reorder epsilon-major for output.
  std::stable_sort(result.cells.begin(), result.cells.end(),
                   [](const EpsilonSweepCell& a, const EpsilonSweepCell& b) {
                     return a.epsilon < b.epsilon;
                   });
  result.rows.reserve(eps_list.size());
  for (std::size_t e = 0; e < eps_list.size(); ++e) {
    result.rows.push_back(SweepRow{eps_list[e], sum_clusters[e] / replications,
                                   sum_outliers[e] / replications});
  }
  return result;
}

}  // namespace bd2d
