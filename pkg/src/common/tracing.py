"""Run ids for census runs, bound into every log line of the run."""

import uuid
from collections.abc import Iterator
from contextlib import contextmanager

import structlog


def generate_run_id() -> str:
    """Generate a short unique run ID."""
    return uuid.uuid4().hex[:8]


@contextmanager
def census_run(run_id: str | None = None) -> Iterator[str]:
    """Bind a run id into the structlog context until the block exits; yields the id."""
    run_id = run_id or generate_run_id()
    with structlog.contextvars.bound_contextvars(run_id=run_id):
        yield run_id
