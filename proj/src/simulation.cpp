#include "bd2d/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "bd2d/caching.hpp"
#include "bd2d/clustering.hpp"
#include "bd2d/popularity.hpp"
#include "bd2d/rng.hpp"
#include "bd2d/spatial.hpp"

namespace bd2d {

namespace {

// Per-replication draw streams; each consumes an independent engine so that
// changing epsilon or the policy never shifts the node, cache, or request
// randomness of a replication.
enum Stream : std::uint64_t { kPoints = 0, kCaches = 1, kRequests = 2 };

unsigned worker_budget() {
  if (const char* env = std::getenv("B2D2D_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void parallel_for(int count, const std::function<void(int)>& body) {
  const unsigned workers =
      std::min<unsigned>(worker_budget(), static_cast<unsigned>(count));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto loop = [&] {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(loop);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

Aggregate aggregate(const std::vector<ReplicationResult>& reps,
                    double (*metric)(const ReplicationResult&)) {
  Aggregate out;
  if (reps.empty()) return out;
  double sum = 0.0;
  for (const auto& r : reps) sum += metric(r);
  out.mean = sum / static_cast<double>(reps.size());
  if (reps.size() > 1) {
    double ss = 0.0;
    for (const auto& r : reps) {
      const double d = metric(r) - out.mean;
      ss += d * d;
    }
    out.stddev = std::sqrt(ss / static_cast<double>(reps.size() - 1));
  }
  return out;
}

}  // namespace

std::string to_string(CachePolicy policy) {
  switch (policy) {
    case CachePolicy::kRandom: return "random";
    case CachePolicy::kMpco: return "mpco";
    case CachePolicy::kCompleteFile: return "complete-file";
  }
  throw std::logic_error("to_string: bad policy value");
}

CachePolicy parse_policy(const std::string& name) {
  if (name == "random") return CachePolicy::kRandom;
  if (name == "mpco") return CachePolicy::kMpco;
  if (name == "complete-file") return CachePolicy::kCompleteFile;
  throw std::invalid_argument(
      "policy must be one of random, mpco, complete-file (got '" + name +
      "')");
}

void ScenarioConfig::validate() const {
  const auto fail = [](const std::string& key, const std::string& what) {
    throw std::invalid_argument("key '" + key + "': " + what);
  };
  if (!(area_width_m > 0.0)) fail("area_width_m", "must be > 0");
  if (!(area_height_m > 0.0)) fail("area_height_m", "must be > 0");
  if (n_nodes < 1) fail("n_nodes", "must be >= 1");
  if (!(epsilon_max > 0.0)) fail("epsilon_max", "must be > 0");
  if (min_bsn < 2) fail("min_bsn", "must be >= 2");
  if (catalog_size < 1) fail("catalog_size", "must be >= 1");
  if (beta_pop < 0.0) fail("beta_pop", "must be >= 0");
  if (beta_req < 0.0) fail("beta_req", "must be >= 0");
  if (!(segment_s > 0.0)) fail("segment_s", "must be > 0");
  if (segment_s > 240.0) fail("segment_s", "must not exceed 240 seconds");
  if (cache_capacity_s < segment_s) {
    fail("cache_capacity_s", "must be >= segment_s");
  }
  if (replications < 1) fail("replications", "must be >= 1");
  if (policy != CachePolicy::kCompleteFile &&
      segments_per_node() > catalog_size) {
    fail("segment_s", "cache holds more segments than the catalog has files");
  }
}

int ScenarioConfig::segments_per_node() const {
  return capacity_in_segments(cache_capacity_s, segment_s);
}

Aggregate ExperimentResult::availability() const {
  return aggregate(replications,
                   [](const ReplicationResult& r) { return r.availability_ratio; });
}

Aggregate ExperimentResult::self_request() const {
  return aggregate(replications,
                   [](const ReplicationResult& r) { return r.self_request_ratio; });
}

Aggregate ExperimentResult::clusters() const {
  return aggregate(replications, [](const ReplicationResult& r) {
    return static_cast<double>(r.n_clusters);
  });
}

Aggregate ExperimentResult::outliers() const {
  return aggregate(replications, [](const ReplicationResult& r) {
    return static_cast<double>(r.n_outliers);
  });
}

ReplicationResult run_replication(const ScenarioConfig& cfg, int index) {
  cfg.validate();
  const auto rep = static_cast<std::uint64_t>(index);
  const Area area(cfg.area_width_m, cfg.area_height_m);
  const std::size_t n = static_cast<std::size_t>(cfg.n_nodes);

  Rng rng_points = make_rng(cfg.base_seed, rep, kPoints);
  const PointSet nodes = generate_uniform(n, area, rng_points);
  const NeighborIndex index_eps(nodes, cfg.epsilon_max);
  const Clustering clusters =
      dbscan(nodes, index_eps, cfg.epsilon_max, cfg.min_bsn);

  Rng rng_caches = make_rng(cfg.base_seed, rep, kCaches);
  const ZipfModel popularity(cfg.catalog_size, cfg.beta_pop);
  const CachePlacement placement = [&] {
    switch (cfg.policy) {
      case CachePolicy::kRandom:
        return place_random(n, popularity, cfg.segments_per_node(),
                            rng_caches);
      case CachePolicy::kMpco:
        return place_mpco(n, popularity.catalog_size(),
                          cfg.segments_per_node());
      case CachePolicy::kCompleteFile:
        return place_complete_file(n, popularity, rng_caches);
    }
    throw std::logic_error("run_replication: bad policy value");
  }();

  Rng rng_requests = make_rng(cfg.base_seed, rep, kRequests);
  const ZipfModel request_model(cfg.catalog_size, cfg.beta_req);

  // One request per node, self-hits counted as hits.
  long hits = 0;
  long self_hits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int rank = static_cast<int>(request_model.sample(rng_requests));
    if (placement.caches(i, rank)) {
      ++hits;
      ++self_hits;
      continue;
    }
    const int own_label = clusters.labels[i];
    if (cfg.enforce_same_cluster && own_label == Clustering::kNoise) continue;
    for (std::size_t j : index_eps.neighbors(i)) {
      if (cfg.enforce_same_cluster && clusters.labels[j] != own_label) continue;
      if (placement.caches(j, rank)) {
        ++hits;
        break;
      }
    }
  }

  ReplicationResult result;
  result.availability_ratio = static_cast<double>(hits) / static_cast<double>(n);
  result.self_request_ratio =
      static_cast<double>(self_hits) / static_cast<double>(n);
  result.n_clusters = clusters.kappa;
  result.n_outliers = clusters.noise_count();
  return result;
}

ExperimentResult run_experiment(const ScenarioConfig& cfg) {
  cfg.validate();
  ExperimentResult result;
  result.config = cfg;
  result.replications.resize(cfg.replications);
  parallel_for(cfg.replications, [&](int rep) {
    result.replications[rep] = run_replication(cfg, rep);
  });
  return result;
}

std::vector<ExperimentResult> run_sweep(const ScenarioConfig& base,
                                        const std::string& axis,
                                        const std::vector<std::string>& values) {
  if (values.empty()) {
    throw std::invalid_argument("run_sweep: no values given");
  }
  const auto as_double = [&](const std::string& v) {
    std::size_t pos = 0;
    double parsed = 0.0;
    try {
      parsed = std::stod(v, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("run_sweep: bad numeric value '" + v + "'");
    }
    if (pos != v.size()) {
      throw std::invalid_argument("run_sweep: bad numeric value '" + v + "'");
    }
    return parsed;
  };
  const auto as_int = [&](const std::string& v) {
    std::size_t pos = 0;
    long long parsed = 0;
    try {
      parsed = std::stoll(v, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("run_sweep: bad integer value '" + v + "'");
    }
    if (pos != v.size()) {
      throw std::invalid_argument("run_sweep: bad integer value '" + v + "'");
    }
    return static_cast<int>(parsed);
  };

  std::function<void(ScenarioConfig&, const std::string&)> apply;
  if (axis == "n_nodes") {
    apply = [&](ScenarioConfig& c, const std::string& v) {
      c.n_nodes = as_int(v);
    };
  } else if (axis == "beta_pop") {
    apply = [&](ScenarioConfig& c, const std::string& v) {
      c.beta_pop = as_double(v);
    };
  } else if (axis == "segment_s" || axis == "segment_duration") {
    apply = [&](ScenarioConfig& c, const std::string& v) {
      c.segment_s = as_double(v);
    };
  } else if (axis == "epsilon_max") {
    apply = [&](ScenarioConfig& c, const std::string& v) {
      c.epsilon_max = as_double(v);
    };
  } else if (axis == "policy") {
    apply = [&](ScenarioConfig& c, const std::string& v) {
      c.policy = parse_policy(v);
    };
  } else {
    throw std::invalid_argument(
        "run_sweep: unknown axis '" + axis +
        "' (expected n_nodes, beta_pop, segment_s, policy, or epsilon_max)");
  }

  std::vector<ExperimentResult> table;
  table.reserve(values.size());
  for (const std::string& v : values) {
    ScenarioConfig cell = base;  // common base_seed across cells
    apply(cell, v);
    table.push_back(run_experiment(cell));
  }
  return table;
}

}  // namespace bd2d
