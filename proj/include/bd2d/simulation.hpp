#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bd2d {

enum class CachePolicy { kRandom, kMpco, kCompleteFile };

std::string to_string(CachePolicy policy);
CachePolicy parse_policy(const std::string& name);

// One experiment scenario. Field defaults are the reference configuration;
// see parse_config for the matching key names.
struct ScenarioConfig {
  double area_width_m = 1000.0;
  double area_height_m = 1000.0;
  int n_nodes = 1000;
  double epsilon_max = 100.0;
  int min_bsn = 2;
  int catalog_size = 1000;
  double beta_pop = 0.6;
  double beta_req = 0.6;
  double segment_s = 60.0;
  double cache_capacity_s = 240.0;
  CachePolicy policy = CachePolicy::kRandom;
  int replications = 500;
  std::uint64_t base_seed = 1;
  bool enforce_same_cluster = true;

  // Throws std::invalid_argument naming the offending key.
  void validate() const;

  // Segments per node under the random/mpco policies: floor(C / S_t).
  int segments_per_node() const;
  // Capacity as a real number of segments, for the placement optimizer.
  double capacity_segments() const { return cache_capacity_s / segment_s; }

  bool operator==(const ScenarioConfig&) const = default;
};

struct ReplicationResult {
  double availability_ratio = 0.0;
  double self_request_ratio = 0.0;
  int n_clusters = 0;
  int n_outliers = 0;
};

struct Aggregate {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for a single value
};

struct ExperimentResult {
  ScenarioConfig config;
  std::vector<ReplicationResult> replications;

  Aggregate availability() const;
  Aggregate self_request() const;
  Aggregate clusters() const;
  Aggregate outliers() const;
};

// One seeded replication: place nodes, cluster, place caches, draw one
// request per node, count hits. A request hits when the rank is in the
// requester's own cache (also a self-hit) or cached by a node within
// epsilon_max that shares the requester's cluster (any node within range if
// enforce_same_cluster is off). Deterministic in (base_seed, index).
ReplicationResult run_replication(const ScenarioConfig& config, int index);

// All replications of the scenario, executed in parallel (worker count is
// capped by the B2D2D_THREADS environment variable), aggregated in
// replication order. Deterministic for equal configs.
ExperimentResult run_experiment(const ScenarioConfig& config);

// One experiment per value of the swept parameter. axis is one of n_nodes,
// beta_pop, segment_s (alias segment_duration), policy, epsilon_max; all
// cells share the base seed so paired comparisons see common randomness.
std::vector<ExperimentResult> run_sweep(const ScenarioConfig& base,
                                        const std::string& axis,
                                        const std::vector<std::string>& values);

}  // namespace bd2d
