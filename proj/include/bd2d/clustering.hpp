#pragma once

#include <cstdint>
#include <vector>

#include "bd2d/spatial.hpp"

namespace bd2d {

// Per-node cluster assignment. labels[i] is a cluster id in 0..kappa-1, or
// kNoise for outliers. Cluster ids are assigned in order of discovery by
// ascending seed-node index, so equal inputs produce equal labelings.
struct Clustering {
  static constexpr int kNoise = -1;

  std::vector<int> labels;
  int kappa = 0;

  int noise_count() const;
};

// Density clustering with radius `epsilon` and threshold `min_bsn`. A node is
// core iff its closed neighborhood (itself plus nodes within epsilon) holds at
// least min_bsn points; clusters are maximal density-connected sets; non-core
// nodes within epsilon of a core join the first cluster that reaches them;
// the rest are noise. The index must have been built with radius >= epsilon.
Clustering dbscan(const PointSet& points, const NeighborIndex& index,
                  double epsilon, int min_bsn);

// Same semantics computed from exhaustive O(n^2) neighborhoods, with no
// spatial index involved. Test oracle for dbscan.
Clustering dbscan_reference(const PointSet& points, double epsilon,
                            int min_bsn);

struct SweepRow {
  double epsilon = 0.0;
  double mean_clusters = 0.0;
  double mean_outliers = 0.0;
};

struct EpsilonSweepCell {
  double epsilon = 0.0;
  int replication = 0;
  int n_clusters = 0;
  int n_outliers = 0;
};

struct EpsilonSweepResult {
  std::vector<EpsilonSweepCell> cells;  // one per (epsilon, replication)
  std::vector<SweepRow> rows;           // one per epsilon, averaged
};

// Clustering statistics over fresh uniform placements of n_nodes points, one
// placement per replication, every epsilon evaluated on the same placement
// within a replication. eps_list must be non-empty and ascending.
EpsilonSweepResult sweep_epsilon(std::size_t n_nodes, const Area& area,
                                 const std::vector<double>& eps_list,
                                 int min_bsn, int replications,
                                 std::uint64_t base_seed);

}  // namespace bd2d
