#pragma once

#include <cstddef>
#include <vector>

#include "bd2d/popularity.hpp"
#include "bd2d/rng.hpp"

namespace bd2d {

// Initial-segment size in megabits for a CBR stream: duration times bitrate.
double segment_size_mbits(double duration_s, double bitrate_mbps);

// How many initial-segments of duration segment_s fit in a cache of
// capacity_s seconds of CBR video. capacity_s >= segment_s > 0.
int capacity_in_segments(double capacity_s, double segment_s);

// Which initial-segment ranks every node holds. Per node the ranks are
// distinct and sorted; the empirical caching frequency q_i is the fraction
// of nodes holding rank i.
class CachePlacement {
 public:
  CachePlacement(std::size_t catalog_size,
                 std::vector<std::vector<int>> ranks_per_node);

  std::size_t node_count() const { return ranks_.size(); }
  std::size_t catalog_size() const { return catalog_size_; }
  const std::vector<int>& ranks(std::size_t node) const;
  bool caches(std::size_t node, int rank) const;

  // q, indexed by rank - 1. Zero vector when there are no nodes.
  std::vector<double> caching_frequency() const;

 private:
  std::size_t catalog_size_;
  std::vector<std::vector<int>> ranks_;
};

// Popularity-based random policy: each node independently draws k distinct
// ranks by successive popularity-weighted sampling without replacement.
// 1 <= k <= catalog size.
CachePlacement place_random(std::size_t n, const ZipfModel& popularity, int k,
                            Rng& rng);

// Most-popular-caching-only: every node holds exactly ranks 1..k.
CachePlacement place_mpco(std::size_t n, std::size_t catalog_size, int k);

// Complete-file baseline: every node holds one rank drawn from `popularity`.
CachePlacement place_complete_file(std::size_t n, const ZipfModel& popularity,
                                   Rng& rng);

}  // namespace bd2d
