#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bd2d/availability.hpp"
#include "bd2d/clustering.hpp"
#include "bd2d/simulation.hpp"

namespace bd2d {

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

// Schema: epsilon_m,replication,n_clusters,n_outliers
void write_epsilon_sweep_csv(std::ostream& out, const EpsilonSweepResult& sweep);

// Schema: policy,n_nodes,beta_pop,beta_req,segment_s,epsilon_m,replication,
//         avail_ratio,self_ratio,n_clusters,n_outliers
// Per-replication rows followed by replication=mean and replication=std rows,
// one block per experiment.
void write_experiment_csv(std::ostream& out,
                          const std::vector<ExperimentResult>& experiments);

// Schema: rank,Q rows followed by a trailing objective,<value> line.
void write_optimization_csv(std::ostream& out, const CachingVector& q,
                            double objective);

}  // namespace bd2d
