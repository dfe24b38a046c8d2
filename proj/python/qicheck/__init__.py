"""Quasi-instantaneous consistency checking for memory snapshots."""

from ._qic import (
    AcquisitionPlan,
    AggregateStats,
    CapacityError,
    CarryAlongGca,
    ClusteringKind,
    ConsistencyReport,
    CoverageError,
    DomainError,
    Error,
    ExecutionTrace,
    OneDimGca,
    OracleVerdict,
    PauseRange,
    PivotConfig,
    RegionLayout,
    RegionMismatch,
    SimResult,
    SimplifiedGca,
    Snapshot,
    SpreadMetrics,
    __version__,
    aggregate_counts,
    associated_time,
    check,
    compute_spread,
    instantaneous_snapshot,
    is_instantaneous,
    layout_for_simulation,
    normalize,
    oracle_check,
    run_pivot,
    simulate,
)

__all__ = [
    "AcquisitionPlan",
    "AggregateStats",
    "CapacityError",
    "CarryAlongGca",
    "ClusteringKind",
    "ConsistencyReport",
    "CoverageError",
    "DomainError",
    "Error",
    "ExecutionTrace",
    "OneDimGca",
    "OracleVerdict",
    "PauseRange",
    "PivotConfig",
    "RegionLayout",
    "RegionMismatch",
    "SimResult",
    "SimplifiedGca",
    "Snapshot",
    "SpreadMetrics",
    "__version__",
    "aggregate_counts",
    "associated_time",
    "check",
    "compute_spread",
    "instantaneous_snapshot",
    "is_instantaneous",
    "layout_for_simulation",
    "normalize",
    "oracle_check",
    "run_pivot",
    "simulate",
]
