"""Initial-segment caching simulator for clustered D2D networks."""

from ._core import (
    Aggregate,
    Area,
    CachePlacement,
    CachePolicy,
    CachingVector,
    Clustering,
    ConfigError,
    EpsilonSweepCell,
    EpsilonSweepResult,
    ExperimentResult,
    Intensity,
    NeighborIndex,
    ObjectiveSpec,
    Point,
    PointSet,
    ReplicationResult,
    Rng,
    ScenarioConfig,
    SweepRow,
    ZipfModel,
    availability_analytic,
    availability_per_content,
    capacity_in_segments,
    dbscan,
    dbscan_reference,
    epsilon_sweep_csv,
    experiment_csv,
    format_double,
    generate_ppp,
    generate_uniform,
    load_config,
    objective_value,
    optimization_csv,
    optimize_bruteforce,
    optimize_greedy,
    parse_config_text,
    parse_policy,
    place_complete_file,
    place_mpco,
    place_random,
    policy_name,
    prob_eta_nodes,
    render_config,
    run_experiment,
    run_replication,
    run_sweep,
    segment_size_mbits,
    squared_distance,
    sweep_epsilon,
)

__all__ = [
    "Aggregate",
    "Area",
    "CachePlacement",
    "CachePolicy",
    "CachingVector",
    "Clustering",
    "ConfigError",
    "EpsilonSweepCell",
    "EpsilonSweepResult",
    "ExperimentResult",
    "Intensity",
    "NeighborIndex",
    "ObjectiveSpec",
    "Point",
    "PointSet",
    "ReplicationResult",
    "Rng",
    "ScenarioConfig",
    "SweepRow",
    "ZipfModel",
    "availability_analytic",
    "availability_per_content",
    "capacity_in_segments",
    "dbscan",
    "dbscan_reference",
    "epsilon_sweep_csv",
    "experiment_csv",
    "format_double",
    "generate_ppp",
    "generate_uniform",
    "load_config",
    "objective_value",
    "optimization_csv",
    "optimize_bruteforce",
    "optimize_greedy",
    "parse_config_text",
    "parse_policy",
    "place_complete_file",
    "place_mpco",
    "place_random",
    "policy_name",
    "prob_eta_nodes",
    "render_config",
    "run_experiment",
    "run_replication",
    "run_sweep",
    "segment_size_mbits",
    "squared_distance",
    "sweep_epsilon",
]
