#include "bd2d/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace bd2d {

std::string format_double(double value) {
  char buf[40];
  if (std::isfinite(value) && std::fabs(value) < 1e15 &&
      value == std::floor(value)) {
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(value));
    return buf;
  }
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

void write_epsilon_sweep_csv(std::ostream& out,
                             const EpsilonSweepResult& sweep) {
  out << "epsilon_m,replication,n_clusters,n_outliers\n";
  for (const EpsilonSweepCell& cell : sweep.cells) {
    out << format_double(cell.epsilon) << ',' << cell.replication << ','
        << cell.n_clusters << ',' << cell.n_outliers << '\n';
  }
}

namespace {

void write_experiment_prefix(std::ostream& out, const ScenarioConfig& c) {
  out << to_string(c.policy) << ',' << c.n_nodes << ','
      << format_double(c.beta_pop) << ',' << format_double(c.beta_req) << ','
      << format_double(c.segment_s) << ',' << format_double(c.epsilon_max)
      << ',';
}

}  // namespace

void write_experiment_csv(std::ostream& out,
                          const std::vector<ExperimentResult>& experiments) {
  out << "policy,n_nodes,beta_pop,beta_req,segment_s,epsilon_m,replication,"
         "avail_ratio,self_ratio,n_clusters,n_outliers\n";
  for (const ExperimentResult& exp : experiments) {
    for (std::size_t rep = 0; rep < exp.replications.size(); ++rep) {
      const ReplicationResult& r = exp.replications[rep];
      write_experiment_prefix(out, exp.config);
      out << rep << ',' << format_double(r.availability_ratio) << ','
          << format_double(r.self_request_ratio) << ',' << r.n_clusters << ','
          << r.n_outliers << '\n';
    }
    const Aggregate avail = exp.availability();
    const Aggregate self = exp.self_request();
    const Aggregate clusters = exp.clusters();
    const Aggregate outliers = exp.outliers();
    write_experiment_prefix(out, exp.config);
    out << "mean," << format_double(avail.mean) << ','
        << format_double(self.mean) << ',' << format_double(clusters.mean)
        << ',' << format_double(outliers.mean) << '\n';
    write_experiment_prefix(out, exp.config);
    out << "std," << format_double(avail.stddev) << ','
        << format_double(self.stddev) << ',' << format_double(clusters.stddev)
        << ',' << format_double(outliers.stddev) << '\n';
  }
}

void write_optimization_csv(std::ostream& out, const CachingVector& q,
                            double objective) {
  out << "rank,Q\n";
  for (std::size_t i = 0; i < q.size(); ++i) {
    out << (i + 1) << ',' << format_double(q[i]) << '\n';
  }
  out << "objective," << format_double(objective) << '\n';
}

}  // namespace bd2d
