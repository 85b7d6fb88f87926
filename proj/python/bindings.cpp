// Python bindings for the simulator core. Randomized operations take an
// explicit Rng so results stay reproducible from Python.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "bd2d/availability.hpp"
#include "bd2d/caching.hpp"
#include "bd2d/clustering.hpp"
#include "bd2d/config.hpp"
#include "bd2d/csv.hpp"
#include "bd2d/popularity.hpp"
#include "bd2d/rng.hpp"
#include "bd2d/simulation.hpp"
#include "bd2d/spatial.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Initial-segment caching simulator for clustered D2D networks";

  // rng
  py::class_<bd2d::Rng>(m, "Rng")
      .def(py::init([](std::uint64_t seed, std::uint64_t stream,
                       std::uint64_t substream) {
             return bd2d::make_rng(seed, stream, substream);
           }),
           py::arg("seed"), py::arg("stream") = 0, py::arg("substream") = 0);

  // spatial
  py::class_<bd2d::Area>(m, "Area")
      .def(py::init<double, double>(), py::arg("width_m"), py::arg("height_m"))
      .def_readonly("width_m", &bd2d::Area::width)
      .def_readonly("height_m", &bd2d::Area::height)
      .def("size", &bd2d::Area::size);

  py::class_<bd2d::Point>(m, "Point")
      .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
      .def_readwrite("x", &bd2d::Point::x)
      .def_readwrite("y", &bd2d::Point::y)
      .def("__repr__", [](const bd2d::Point& p) {
        std::ostringstream out;
        out << "Point(" << p.x << ", " << p.y << ")";
        return out.str();
      });

  py::class_<bd2d::PointSet>(m, "PointSet")
      .def(py::init<bd2d::Area, std::vector<bd2d::Point>>(), py::arg("area"),
           py::arg("points"))
      .def_property_readonly("area", &bd2d::PointSet::area)
      .def("size", &bd2d::PointSet::size)
      .def("__len__", &bd2d::PointSet::size)
      .def("__getitem__",
           [](const bd2d::PointSet& ps, std::size_t i) {
             if (i >= ps.size()) throw py::index_error();
             return ps[i];
           })
      .def("points", &bd2d::PointSet::points);

  m.def("generate_uniform", &bd2d::generate_uniform, py::arg("n"),
        py::arg("area"), py::arg("rng"));
  m.def("generate_ppp", &bd2d::generate_ppp, py::arg("density_per_m2"),
        py::arg("area"), py::arg("rng"));
  m.def("squared_distance", &bd2d::squared_distance, py::arg("a"),
        py::arg("b"));

  py::class_<bd2d::NeighborIndex>(m, "NeighborIndex")
      .def(py::init<const bd2d::PointSet&, double>(), py::arg("points"),
           py::arg("radius"), py::keep_alive<1, 2>())
      .def_property_readonly("radius", &bd2d::NeighborIndex::radius)
      .def("neighbors",
           [](const bd2d::NeighborIndex& idx, std::size_t center) {
             return idx.neighbors(center);
           },
           py::arg("center"))
      .def("neighbors_within",
           [](const bd2d::NeighborIndex& idx, std::size_t center, double r) {
             return idx.neighbors_within(center, r);
           },
           py::arg("center"), py::arg("radius"))
      .def("neighbors_of_point",
           [](const bd2d::NeighborIndex& idx, const bd2d::Point& p, double r) {
             return idx.neighbors_within(p, r);
           },
           py::arg("point"), py::arg("radius"));

  // clustering
  py::class_<bd2d::Clustering>(m, "Clustering")
      .def_readonly("labels", &bd2d::Clustering::labels)
      .def_readonly("kappa", &bd2d::Clustering::kappa)
      .def("noise_count", &bd2d::Clustering::noise_count)
      .def_readonly_static("NOISE", &bd2d::Clustering::kNoise);

  m.def("dbscan", &bd2d::dbscan, py::arg("points"), py::arg("index"),
        py::arg("epsilon"), py::arg("min_bsn"));
  m.def("dbscan_reference", &bd2d::dbscan_reference, py::arg("points"),
        py::arg("epsilon"), py::arg("min_bsn"));

  py::class_<bd2d::SweepRow>(m, "SweepRow")
      .def_readonly("epsilon", &bd2d::SweepRow::epsilon)
      .def_readonly("mean_clusters", &bd2d::SweepRow::mean_clusters)
      .def_readonly("mean_outliers", &bd2d::SweepRow::mean_outliers);

  py::class_<bd2d::EpsilonSweepCell>(m, "EpsilonSweepCell")
      .def_readonly("epsilon", &bd2d::EpsilonSweepCell::epsilon)
      .def_readonly("replication", &bd2d::EpsilonSweepCell::replication)
      .def_readonly("n_clusters", &bd2d::EpsilonSweepCell::n_clusters)
      .def_readonly("n_outliers", &bd2d::EpsilonSweepCell::n_outliers);

  py::class_<bd2d::EpsilonSweepResult>(m, "EpsilonSweepResult")
      .def_readonly("cells", &bd2d::EpsilonSweepResult::cells)
      .def_readonly("rows", &bd2d::EpsilonSweepResult::rows);

  m.def("sweep_epsilon", &bd2d::sweep_epsilon, py::arg("n_nodes"),
        py::arg("area"), py::arg("eps_list"), py::arg("min_bsn"),
        py::arg("replications"), py::arg("base_seed"));

  // popularity
  py::class_<bd2d::ZipfModel>(m, "ZipfModel")
      .def(py::init<int, double>(), py::arg("catalog_size"),
           py::arg("exponent"))
      .def_property_readonly("catalog_size", &bd2d::ZipfModel::catalog_size)
      .def_property_readonly("exponent", &bd2d::ZipfModel::exponent)
      .def("pmf", &bd2d::ZipfModel::pmf, py::arg("rank"))
      .def("probabilities", &bd2d::ZipfModel::probabilities)
      .def("top_k_mass", &bd2d::ZipfModel::top_k_mass, py::arg("k"))
      .def("sample", &bd2d::ZipfModel::sample, py::arg("rng"));

  // caching
  m.def("segment_size_mbits", &bd2d::segment_size_mbits, py::arg("duration_s"),
        py::arg("bitrate_mbps"));
  m.def("capacity_in_segments", &bd2d::capacity_in_segments,
        py::arg("capacity_s"), py::arg("segment_s"));

  py::class_<bd2d::CachePlacement>(m, "CachePlacement")
      .def(py::init<int, std::vector<std::vector<int>>>(),
           py::arg("catalog_size"), py::arg("ranks_per_node"))
      .def_property_readonly("catalog_size", &bd2d::CachePlacement::catalog_size)
      .def("node_count", &bd2d::CachePlacement::node_count)
      .def("ranks", &bd2d::CachePlacement::ranks, py::arg("node"))
      .def("caches", &bd2d::CachePlacement::caches, py::arg("node"),
           py::arg("rank"))
      .def("caching_frequency", &bd2d::CachePlacement::caching_frequency);

  m.def("place_random", &bd2d::place_random, py::arg("n_nodes"),
        py::arg("popularity"), py::arg("segments_per_node"), py::arg("rng"));
  m.def("place_mpco", &bd2d::place_mpco, py::arg("n_nodes"),
        py::arg("catalog_size"), py::arg("segments_per_node"));
  m.def("place_complete_file", &bd2d::place_complete_file, py::arg("n_nodes"),
        py::arg("popularity"), py::arg("rng"));

  // availability
  py::class_<bd2d::Intensity>(m, "Intensity")
      .def(py::init<double, double>(), py::arg("density_per_m2"),
           py::arg("radius_m"))
      .def_static("from_node_count", &bd2d::Intensity::from_node_count,
                  py::arg("n_nodes"), py::arg("area"), py::arg("radius_m"))
      .def_property_readonly("density", &bd2d::Intensity::density)
      .def_property_readonly("radius", &bd2d::Intensity::radius)
      .def_property_readonly("mu", &bd2d::Intensity::mu);

  m.def("prob_eta_nodes", &bd2d::prob_eta_nodes, py::arg("intensity"),
        py::arg("eta"));
  m.def("availability_analytic", &bd2d::availability_analytic,
        py::arg("intensity"));
  m.def("availability_per_content", &bd2d::availability_per_content,
        py::arg("intensity"), py::arg("q"));

  py::class_<bd2d::CachingVector>(m, "CachingVector")
      .def(py::init<std::vector<double>>(), py::arg("values"))
      .def("values", &bd2d::CachingVector::values)
      .def("sum", &bd2d::CachingVector::sum)
      .def("__len__", &bd2d::CachingVector::size)
      .def("__getitem__",
           [](const bd2d::CachingVector& q, std::size_t i) {
             if (i >= q.size()) throw py::index_error();
             return q[i];
           });

  py::class_<bd2d::ObjectiveSpec>(m, "ObjectiveSpec")
      .def(py::init<bd2d::ZipfModel, double, bd2d::Intensity, double>(),
           py::arg("request_pmf"), py::arg("request_count"),
           py::arg("intensity"), py::arg("capacity_segments"))
      .def_readonly("request", &bd2d::ObjectiveSpec::request)
      .def_readonly("request_count", &bd2d::ObjectiveSpec::request_count)
      .def_readonly("intensity", &bd2d::ObjectiveSpec::intensity)
      .def_readonly("capacity_segments",
                    &bd2d::ObjectiveSpec::capacity_segments);

  m.def("objective_value", &bd2d::objective_value, py::arg("q"),
        py::arg("spec"));
  m.def("optimize_greedy", &bd2d::optimize_greedy, py::arg("spec"));
  m.def("optimize_bruteforce", &bd2d::optimize_bruteforce, py::arg("spec"),
        py::arg("grid_step"));

  // simulation
  py::enum_<bd2d::CachePolicy>(m, "CachePolicy")
      .value("RANDOM", bd2d::CachePolicy::kRandom)
      .value("MPCO", bd2d::CachePolicy::kMpco)
      .value("COMPLETE_FILE", bd2d::CachePolicy::kCompleteFile);

  m.def("parse_policy", &bd2d::parse_policy, py::arg("name"));
  m.def("policy_name",
        [](bd2d::CachePolicy p) { return bd2d::to_string(p); },
        py::arg("policy"));

  py::class_<bd2d::ScenarioConfig>(m, "ScenarioConfig")
      .def(py::init<>())
      .def_readwrite("area_width_m", &bd2d::ScenarioConfig::area_width_m)
      .def_readwrite("area_height_m", &bd2d::ScenarioConfig::area_height_m)
      .def_readwrite("n_nodes", &bd2d::ScenarioConfig::n_nodes)
      .def_readwrite("epsilon_max", &bd2d::ScenarioConfig::epsilon_max)
      .def_readwrite("min_bsn", &bd2d::ScenarioConfig::min_bsn)
      .def_readwrite("catalog_size", &bd2d::ScenarioConfig::catalog_size)
      .def_readwrite("beta_pop", &bd2d::ScenarioConfig::beta_pop)
      .def_readwrite("beta_req", &bd2d::ScenarioConfig::beta_req)
      .def_readwrite("segment_s", &bd2d::ScenarioConfig::segment_s)
      .def_readwrite("cache_capacity_s", &bd2d::ScenarioConfig::cache_capacity_s)
      .def_readwrite("policy", &bd2d::ScenarioConfig::policy)
      .def_readwrite("replications", &bd2d::ScenarioConfig::replications)
      .def_readwrite("base_seed", &bd2d::ScenarioConfig::base_seed)
      .def_readwrite("enforce_same_cluster",
                     &bd2d::ScenarioConfig::enforce_same_cluster)
      .def("validate", &bd2d::ScenarioConfig::validate)
      .def("segments_per_node", &bd2d::ScenarioConfig::segments_per_node)
      .def("capacity_segments", &bd2d::ScenarioConfig::capacity_segments)
      .def(py::self == py::self);

  py::class_<bd2d::ReplicationResult>(m, "ReplicationResult")
      .def_readonly("availability_ratio",
                    &bd2d::ReplicationResult::availability_ratio)
      .def_readonly("self_request_ratio",
                    &bd2d::ReplicationResult::self_request_ratio)
      .def_readonly("n_clusters", &bd2d::ReplicationResult::n_clusters)
      .def_readonly("n_outliers", &bd2d::ReplicationResult::n_outliers);

  py::class_<bd2d::Aggregate>(m, "Aggregate")
      .def_readonly("mean", &bd2d::Aggregate::mean)
      .def_readonly("stddev", &bd2d::Aggregate::stddev);

  py::class_<bd2d::ExperimentResult>(m, "ExperimentResult")
      .def_readonly("config", &bd2d::ExperimentResult::config)
      .def_readonly("replications", &bd2d::ExperimentResult::replications)
      .def("availability", &bd2d::ExperimentResult::availability)
      .def("self_request", &bd2d::ExperimentResult::self_request)
      .def("clusters", &bd2d::ExperimentResult::clusters)
      .def("outliers", &bd2d::ExperimentResult::outliers);

  m.def("run_replication", &bd2d::run_replication, py::arg("config"),
        py::arg("index"));
  m.def("run_experiment", &bd2d::run_experiment, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("run_sweep", &bd2d::run_sweep, py::arg("base"), py::arg("axis"),
        py::arg("values"), py::call_guard<py::gil_scoped_release>());

  // config
  m.def("parse_config_text", &bd2d::parse_config_text, py::arg("text"));
  m.def("load_config", &bd2d::load_config, py::arg("path"));
  m.def("render_config", &bd2d::render_config, py::arg("config"));

  // csv
  m.def("format_double", &bd2d::format_double, py::arg("value"));
  m.def("epsilon_sweep_csv", [](const bd2d::EpsilonSweepResult& sweep) {
    std::ostringstream out;
    bd2d::write_epsilon_sweep_csv(out, sweep);
    return out.str();
  });
  m.def("experiment_csv",
        [](const std::vector<bd2d::ExperimentResult>& experiments) {
          std::ostringstream out;
          bd2d::write_experiment_csv(out, experiments);
          return out.str();
        });
  m.def("optimization_csv",
        [](const bd2d::CachingVector& q, double objective) {
          std::ostringstream out;
          bd2d::write_optimization_csv(out, q, objective);
          return out.str();
        },
        py::arg("q"), py::arg("objective"));

  py::register_exception<bd2d::ConfigError>(m, "ConfigError",
                                            PyExc_ValueError);
}
