"""Batch execution, aggregation, logging and reporting of controller comparisons."""

from phys_sims_quadrotor.harness.core import (
    CONTROLLER_ORDER,
    SWEEP_COLORS,
    RunTask,
    execute_run,
    run_compare,
    run_sweep,
    run_tasks,
    summarize_sweep,
)
from phys_sims_quadrotor.harness.logging import RunLogger
from phys_sims_quadrotor.harness.metrics import METRIC_SPECS, MetricSpec, aggregate_channel
from phys_sims_quadrotor.harness.records import (
    CompareResult,
    OrderingCell,
    RunRecord,
    SweepOutcome,
)
from phys_sims_quadrotor.harness.reporting import (
    build_compare_summary,
    build_sweep_summary,
    save_summary,
    write_metrics_table,
)

__all__ = [
    "CONTROLLER_ORDER",
    "METRIC_SPECS",
    "SWEEP_COLORS",
    "CompareResult",
    "MetricSpec",
    "OrderingCell",
    "RunLogger",
    "RunRecord",
    "RunTask",
    "SweepOutcome",
    "aggregate_channel",
    "build_compare_summary",
    "build_sweep_summary",
    "execute_run",
    "run_compare",
    "run_sweep",
    "run_tasks",
    "save_summary",
    "summarize_sweep",
    "write_metrics_table",
]
