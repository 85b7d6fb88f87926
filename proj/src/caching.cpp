#include "bd2d/caching.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bd2d {

double segment_size_mbits(double duration_s, double bitrate_mbps) {
  if (!(duration_s > 0.0)) {
    throw std::invalid_argument("segment_size_mbits: duration must be > 0");
  }
  if (!(bitrate_mbps > 0.0)) {
    throw std::invalid_argument("segment_size_mbits: bitrate must be > 0");
  }
  return duration_s * bitrate_mbps;
}

int capacity_in_segments(double capacity_s, double segment_s) {
  if (!(segment_s > 0.0)) {
    throw std::invalid_argument("capacity_in_segments: segment_s must be > 0");
  }
  if (capacity_s < segment_s) {
    throw std::invalid_argument(
        "capacity_in_segments: capacity_s must be >= segment_s");
  }
  return static_cast<int>(std::floor(capacity_s / segment_s));
}

CachePlacement::CachePlacement(std::size_t catalog_size,
                               std::vector<std::vector<int>> ranks_per_node)
    : catalog_size_(catalog_size), ranks_(std::move(ranks_per_node)) {
  for (const auto& node_ranks : ranks_) {
    if (!std::is_sorted(node_ranks.begin(), node_ranks.end())) {
      throw std::invalid_argument("CachePlacement: ranks must be sorted");
    }
    if (std::adjacent_find(node_ranks.begin(), node_ranks.end()) !=
        node_ranks.end()) {
      throw std::invalid_argument("CachePlacement: ranks must be distinct");
    }
    if (!node_ranks.empty() &&
        (node_ranks.front() < 1 ||
         node_ranks.back() > static_cast<int>(catalog_size_))) {
      throw std::invalid_argument("CachePlacement: rank outside catalog");
    }
  }
}

const std::vector<int>& CachePlacement::ranks(std::size_t node) const {
  if (node >= ranks_.size()) {
    throw std::out_of_range("CachePlacement: unknown node " +
                            std::to_string(node));
  }
  return ranks_[node];
}

bool CachePlacement::caches(std::size_t node, int rank) const {
  const std::vector<int>& r = ranks(node);
  return std::binary_search(r.begin(), r.end(), rank);
}

std::vector<double> CachePlacement::caching_frequency() const {
  std::vector<double> q(catalog_size_, 0.0);
  if (ranks_.empty()) return q;
  for (const auto& node_ranks : ranks_) {
    for (int rank : node_ranks) q[rank - 1] += 1.0;
  }
  for (double& v : q) v /= static_cast<double>(ranks_.size());
  return q;
}

namespace {

void check_k(int k, std::size_t catalog_size, const char* who) {
  if (k < 1) {
    throw std::invalid_argument(std::string(who) + ": k must be at least 1");
  }
  if (static_cast<std::size_t>(k) > catalog_size) {
    throw std::invalid_argument(std::string(who) +
                                ": k exceeds catalog size");
  }
}

// k distinct ranks by popularity-weighted draws without replacement. Two
// exact realizations of the same distribution: rejection of repeats (fast
// for k << L) and the exponential-race form of weighted sampling without
// replacement (O(L) regardless of k).
std::vector<int> draw_distinct(const ZipfModel& pop, int k, Rng& rng,
                               std::vector<char>& taken) {
  const std::size_t L = pop.catalog_size();
  std::vector<int> chosen;
  chosen.reserve(k);
  if (static_cast<std::size_t>(k) == L) {
    chosen.resize(L);
    std::iota(chosen.begin(), chosen.end(), 1);
    return chosen;
  }
  if (static_cast<std::size_t>(k) * 2 <= L) {
    while (chosen.size() < static_cast<std::size_t>(k)) {
      const int rank = static_cast<int>(pop.sample(rng));
      if (!taken[rank]) {
        taken[rank] = 1;
        chosen.push_back(rank);
      }
    }
    for (int rank : chosen) taken[rank] = 0;
  } else {
    std::vector<std::pair<double, int>> race(L);
    for (std::size_t y = 1; y <= L; ++y) {
      const double u = uniform_double(rng, 0.0, 1.0);
      race[y - 1] = {-std::log1p(-u) / pop.pmf(y), static_cast<int>(y)};
    }
    std::nth_element(race.begin(), race.begin() + (k - 1), race.end());
    for (int i = 0; i < k; ++i) chosen.push_back(race[i].second);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

CachePlacement place_random(std::size_t n, const ZipfModel& popularity, int k,
                            Rng& rng) {
  check_k(k, popularity.catalog_size(), "place_random");
  std::vector<std::vector<int>> ranks;
  ranks.reserve(n);
  std::vector<char> taken(popularity.catalog_size() + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    ranks.push_back(draw_distinct(popularity, k, rng, taken));
  }
  return CachePlacement(popularity.catalog_size(), std::move(ranks));
}

CachePlacement place_mpco(std::size_t n, std::size_t catalog_size, int k) {
  check_k(k, catalog_size, "place_mpco");
  std::vector<int> top(k);
  std::iota(top.begin(), top.end(), 1);
  return CachePlacement(catalog_size,
                        std::vector<std::vector<int>>(n, top));
}

CachePlacement place_complete_file(std::size_t n, const ZipfModel& popularity,
                                   Rng& rng) {
  std::vector<std::vector<int>> ranks;
  ranks.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ranks.push_back({static_cast<int>(popularity.sample(rng))});
  }
  return CachePlacement(popularity.catalog_size(), std::move(ranks));
}

}  // namespace bd2d
