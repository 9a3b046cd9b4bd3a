"""Spectral radius ratio tracking for evolving networks.

The ratio of the adjacency spectral radius to the mean degree, together with
the coefficient of variation of the degree sequence, measured while a network
grows by preferential attachment or is rewired from a regular lattice.
"""

from .ba import BAConfig, attachment_distribution, ba_evolve, ba_initialize, select_targets
from .errors import (
    ConstantSeriesError,
    DuplicateEdgeError,
    EdgeListParseError,
    EmptyGraphError,
    LengthMismatchError,
    MissingEdgeError,
    NetspectraError,
    NodeOutOfRangeError,
    NotConvergedError,
    SelfLoopError,
    StepMismatchError,
    TooFewNodesError,
    ZeroDegreeSumError,
    ZeroMeanDegreeError,
)
from .experiment import (
    RNG_NAME,
    ExperimentConfig,
    RunSeed,
    SweepRow,
    derive_seed,
    run_ba_condition,
    run_ba_series,
    run_ba_table,
    run_seeds,
    run_ws_condition,
    run_ws_series,
    run_ws_sweep,
)
from .graph import DegreeStats, Graph, degree_stats, parse_edge_list, write_edge_list
from .metrics import (
    AveragedSummary,
    EvolutionRecord,
    TimeSeries,
    average_runs,
    pearson,
    run_correlations,
    snapshot,
    summarize_final,
)
from .spectral import (
    PowerIterationConfig,
    SpectralResult,
    power_iteration,
    spectral_radius_ratio,
)
from .ws import RewireEvent, WSConfig, initial_edges, ws_initialize, ws_rewire

__version__ = "0.1.0"

__all__ = [
    "AveragedSummary",
    "BAConfig",
    "ConstantSeriesError",
    "DegreeStats",
    "DuplicateEdgeError",
    "EdgeListParseError",
    "EmptyGraphError",
    "EvolutionRecord",
    "ExperimentConfig",
    "Graph",
    "LengthMismatchError",
    "MissingEdgeError",
    "NetspectraError",
    "NodeOutOfRangeError",
    "NotConvergedError",
    "PowerIterationConfig",
    "RNG_NAME",
    "RewireEvent",
    "RunSeed",
    "SelfLoopError",
    "SpectralResult",
    "StepMismatchError",
    "SweepRow",
    "TimeSeries",
    "TooFewNodesError",
    "WSConfig",
    "ZeroDegreeSumError",
    "ZeroMeanDegreeError",
    "attachment_distribution",
    "average_runs",
    "ba_evolve",
    "ba_initialize",
    "degree_stats",
    "derive_seed",
    "initial_edges",
    "parse_edge_list",
    "pearson",
    "power_iteration",
    "run_ba_condition",
    "run_ba_series",
    "run_ba_table",
    "run_correlations",
    "run_seeds",
    "run_ws_condition",
    "run_ws_series",
    "run_ws_sweep",
    "select_targets",
    "snapshot",
    "spectral_radius_ratio",
    "summarize_final",
    "write_edge_list",
    "ws_initialize",
    "ws_rewire",
]
