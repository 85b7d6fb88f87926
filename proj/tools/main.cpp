// Command line front end: epsilon sweeps, availability experiments, and
// cache placement optimization, all driven by a key = value config file.

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bd2d/availability.hpp"
#include "bd2d/clustering.hpp"
#include "bd2d/config.hpp"
#include "bd2d/csv.hpp"
#include "bd2d/simulation.hpp"

namespace {

double parse_strict_double(const std::string& text, const char* what) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error(std::string(what) + ": not a number: '" + text +
                             "'");
  }
  if (pos != text.size()) {
    throw std::runtime_error(std::string(what) + ": not a number: '" + text +
                             "'");
  }
  return value;
}

// Range spec start:stop:step, inclusive of stop up to rounding slack.
std::vector<double> parse_eps_range(const std::string& spec) {
  std::vector<std::string> parts;
  std::string piece;
  std::istringstream in(spec);
  while (std::getline(in, piece, ':')) parts.push_back(piece);
  if (parts.size() != 3) {
    throw std::runtime_error("--eps expects start:stop:step, got '" + spec +
                             "'");
  }
  const double start = parse_strict_double(parts[0], "--eps start");
  const double stop = parse_strict_double(parts[1], "--eps stop");
  const double step = parse_strict_double(parts[2], "--eps step");
  if (start < 1.0) {
    throw std::runtime_error("--eps start must be >= 1");
  }
  if (step <= 0.0) {
    throw std::runtime_error("--eps step must be positive");
  }
  if (stop < start) {
    throw std::runtime_error("--eps range is descending (stop < start)");
  }
  std::vector<double> values;
  const double slack = step * 1e-9;
  for (int i = 0;; ++i) {
    const double v = start + step * i;
    if (v > stop + slack) break;
    values.push_back(v);
  }
  return values;
}

// axis=v1,v2,... for --sweep.
void parse_sweep_spec(const std::string& spec, std::string* axis,
                      std::vector<std::string>* values) {
  const std::size_t eq = spec.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
    throw std::runtime_error("--sweep expects axis=v1,v2,..., got '" + spec +
                             "'");
  }
  *axis = spec.substr(0, eq);
  std::istringstream in(spec.substr(eq + 1));
  std::string piece;
  while (std::getline(in, piece, ',')) {
    if (piece.empty()) {
      throw std::runtime_error("--sweep has an empty value in '" + spec + "'");
    }
    values->push_back(piece);
  }
  if (values->empty()) {
    throw std::runtime_error("--sweep has no values in '" + spec + "'");
  }
}

// Exit status 0 only when every byte reached the destination.
int emit(const std::string& body, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << body;
    std::cout.flush();
    if (!std::cout.good()) {
      std::cerr << "error: writing to stdout failed\n";
      return 1;
    }
    return 0;
  }
  std::ofstream out(output_path, std::ios::binary | std::ios::trunc);
  if (!out.is_open()) {
    std::cerr << "error: cannot open output file '" << output_path << "'\n";
    return 1;
  }
  out << body;
  out.flush();
  if (!out.good()) {
    std::cerr << "error: writing '" << output_path << "' failed\n";
    return 1;
  }
  return 0;
}

int run_sweep_epsilon(const std::string& config_path,
                      const std::string& eps_spec,
                      const std::string& output_path) {
  const bd2d::ScenarioConfig cfg = bd2d::load_config(config_path);
  const std::vector<double> eps = parse_eps_range(eps_spec);
  const bd2d::Area area(cfg.area_width_m, cfg.area_height_m);
  const bd2d::EpsilonSweepResult sweep = bd2d::sweep_epsilon(
      static_cast<std::size_t>(cfg.n_nodes), area, eps, cfg.min_bsn,
      cfg.replications, cfg.base_seed);
  std::ostringstream body;
  bd2d::write_epsilon_sweep_csv(body, sweep);
  return emit(body.str(), output_path);
}

int run_availability(const std::string& config_path,
                     const std::string& sweep_spec,
                     const std::string& output_path) {
  const bd2d::ScenarioConfig cfg = bd2d::load_config(config_path);
  std::vector<bd2d::ExperimentResult> results;
  if (sweep_spec.empty()) {
    results.push_back(bd2d::run_experiment(cfg));
  } else {
    std::string axis;
    std::vector<std::string> values;
    parse_sweep_spec(sweep_spec, &axis, &values);
    results = bd2d::run_sweep(cfg, axis, values);
  }
  std::ostringstream body;
  bd2d::write_experiment_csv(body, results);
  return emit(body.str(), output_path);
}

int run_optimize(const std::string& config_path, bool bruteforce,
                 double grid_step, const std::string& output_path) {
  const bd2d::ScenarioConfig cfg = bd2d::load_config(config_path);
  const bd2d::Area area(cfg.area_width_m, cfg.area_height_m);
  const bd2d::ObjectiveSpec spec(
      bd2d::ZipfModel(cfg.catalog_size, cfg.beta_req),
      static_cast<double>(cfg.n_nodes),
      bd2d::Intensity::from_node_count(cfg.n_nodes, area, cfg.epsilon_max),
      cfg.capacity_segments());
  if (bruteforce && cfg.catalog_size > 6) {
    std::cerr << "error: --bruteforce is limited to catalogs of at most 6 "
                 "ranks (catalog_size = "
              << cfg.catalog_size << ")\n";
    return 1;
  }
  const bd2d::CachingVector greedy = bd2d::optimize_greedy(spec);
  std::ostringstream body;
  if (!bruteforce) {
    bd2d::write_optimization_csv(body, greedy,
                                 bd2d::objective_value(greedy, spec));
  } else {
    const bd2d::CachingVector brute =
        bd2d::optimize_bruteforce(spec, grid_step);
    body << "method,greedy\n";
    bd2d::write_optimization_csv(body, greedy,
                                 bd2d::objective_value(greedy, spec));
    body << "method,bruteforce\n";
    bd2d::write_optimization_csv(body, brute,
                                 bd2d::objective_value(brute, spec));
  }
  return emit(body.str(), output_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Initial-segment caching experiments for clustered "
               "device-to-device networks"};
  app.require_subcommand(1);

  std::string config_path;
  std::string eps_spec;
  std::string sweep_spec;
  std::string output_path;
  bool bruteforce = false;
  double grid_step = 0.25;

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep-epsilon", "Cluster and outlier counts across a range of radii");
  sweep_cmd->add_option("--config", config_path, "Scenario config file")
      ->required();
  sweep_cmd->add_option("--eps", eps_spec, "Radius range start:stop:step")
      ->required();
  sweep_cmd->add_option("--output", output_path, "Destination CSV file")
      ->required();

  CLI::App* avail_cmd = app.add_subcommand(
      "availability", "Monte Carlo availability and self-request ratios");
  avail_cmd->add_option("--config", config_path, "Scenario config file")
      ->required();
  avail_cmd->add_option("--sweep", sweep_spec,
                        "Sweep one parameter: axis=v1,v2,...");
  avail_cmd->add_option("--output", output_path, "Destination CSV file")
      ->required();

  CLI::App* opt_cmd = app.add_subcommand(
      "optimize", "Per-rank caching probabilities maximizing availability");
  opt_cmd->add_option("--config", config_path, "Scenario config file")
      ->required();
  opt_cmd->add_flag("--bruteforce", bruteforce,
                    "Also run the exhaustive grid search (small catalogs)");
  opt_cmd->add_option("--grid-step", grid_step,
                      "Grid resolution for --bruteforce (0.05 to 0.5)");
  opt_cmd->add_option("--output", output_path,
                      "Destination CSV file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep_cmd) {
      return run_sweep_epsilon(config_path, eps_spec, output_path);
    }
    if (*avail_cmd) {
      return run_availability(config_path, sweep_spec, output_path);
    }
    return run_optimize(config_path, bruteforce, grid_step, output_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
