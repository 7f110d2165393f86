"""Prometheus metrics for census runs."""

from pathlib import Path

from prometheus_client import CollectorRegistry, Counter, Histogram, write_to_textfile

REGISTRY = CollectorRegistry()

FORMS_EXAMINED = Counter(
    "census_forms_examined_total",
    "Total number of canonical forms passed to the obstruction check",
    registry=REGISTRY,
)

FORMS_OBSTRUCTED = Counter(
    "census_forms_obstructed_total",
    "Total number of canonical forms found obstructed",
    registry=REGISTRY,
)

BLOCK_DURATION = Histogram(
    "census_block_duration_seconds",
    "Duration of one leading-fibre block of a census",
    buckets=[0.001, 0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 10.0, 60.0],
    registry=REGISTRY,
)

CENSUS_RUNS = Counter(
    "census_runs_total",
    "Total number of census runs",
    ["status"],  # completed, failed
    registry=REGISTRY,
)


def write_metrics(path: str | Path) -> None:
    """Write the census registry in Prometheus text format (textfile collector)."""
    write_to_textfile(str(path), REGISTRY)
