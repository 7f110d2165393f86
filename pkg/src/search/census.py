"""
Census of the seiferter obstruction over a bounded universe of canonical forms.

Work is split into blocks keyed by the leading exceptional fibre. Blocks are
checked in worker processes and reduced in block order, so every count and the
order of the obstructed list are independent of the number of workers.
"""

import time
from collections import Counter
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor

from pydantic import BaseModel, ConfigDict

from src.common.logging import get_logger
from src.common.metrics import BLOCK_DURATION, CENSUS_RUNS, FORMS_EXAMINED, FORMS_OBSTRUCTED
from src.common.tracing import census_run
from src.search.enumerate import Fibre, enumerate_block, leading_fibres
from src.search.models import Census, SearchConfig, SweepPoint
from src.seiferter import ObstructionReport, theorem2_check
from src.sfs import torque_profile

logger = get_logger(__name__)


class BlockResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    leading: Fibre
    examined: int
    obstructed: tuple[ObstructionReport, ...]
    profile_examined: dict[int, int]
    profile_obstructed: dict[int, int]
    duration_seconds: float


def check_block(config: SearchConfig, leading: Fibre) -> BlockResult:
    """Run the obstruction over one block; a pure function of its arguments."""
    started = time.perf_counter()
    examined = 0
    obstructed: list[ObstructionReport] = []
    profile_examined: Counter[int] = Counter()
    profile_obstructed: Counter[int] = Counter()

    for form in enumerate_block(config, leading):
        examined += 1
        profile = torque_profile(form)
        profile_examined[profile] += 1
        report = theorem2_check(form)
        if report.obstructed:
            obstructed.append(report)
            profile_obstructed[profile] += 1

    return BlockResult(
        leading=leading,
        examined=examined,
        obstructed=tuple(obstructed),
        profile_examined=dict(profile_examined),
        profile_obstructed=dict(profile_obstructed),
        duration_seconds=time.perf_counter() - started,
    )


def _run_blocks(config: SearchConfig, blocks: list[Fibre]) -> Iterable[BlockResult]:
    if config.worker_count == 1:
        return (check_block(config, leading) for leading in blocks)
    executor = ProcessPoolExecutor(max_workers=config.worker_count)
    try:
        # map yields in submission order regardless of completion order
        return list(executor.map(check_block, [config] * len(blocks), blocks))
    finally:
        executor.shutdown(wait=True)


def run_census(config: SearchConfig) -> Census:
    with census_run() as run_id:
        return _census(config, run_id)


def _census(config: SearchConfig, run_id: str) -> Census:
    started = time.perf_counter()
    blocks = leading_fibres(config)
    logger.info(
        "census_started",
        max_multiplicity=config.max_multiplicity,
        max_abs_h=config.max_abs_h,
        max_abs_background=config.max_abs_background,
        torque_filter=config.torque_filter.value,
        workers=config.worker_count,
        blocks=len(blocks),
    )

    total_examined = 0
    obstructed: list[ObstructionReport] = []
    profile_examined: Counter[int] = Counter()
    profile_obstructed: Counter[int] = Counter()

    try:
        for result in _run_blocks(config, blocks):
            total_examined += result.examined
            obstructed.extend(result.obstructed)
            profile_examined.update(result.profile_examined)
            profile_obstructed.update(result.profile_obstructed)

            FORMS_EXAMINED.inc(result.examined)
            FORMS_OBSTRUCTED.inc(len(result.obstructed))
            BLOCK_DURATION.observe(result.duration_seconds)
            logger.debug(
                "census_block_complete",
                leading=f"({result.leading[0]},{result.leading[1]})",
                examined=result.examined,
                obstructed=len(result.obstructed),
            )
    except Exception as e:
        CENSUS_RUNS.labels(status="failed").inc()
        logger.error("census_failed", error=str(e))
        raise

    census = Census(
        config=config,
        run_id=run_id,
        total_examined=total_examined,
        total_obstructed=len(obstructed),
        obstructed=tuple(obstructed),
        torque_profile_examined=dict(sorted(profile_examined.items())),
        torque_profile_obstructed=dict(sorted(profile_obstructed.items())),
        wall_time_ms=round((time.perf_counter() - started) * 1000),
    )
    CENSUS_RUNS.labels(status="completed").inc()
    logger.info(
        "census_completed",
        examined=census.total_examined,
        obstructed=census.total_obstructed,
        wall_time_ms=census.wall_time_ms,
    )
    return census


def bound_sweep(
    base: SearchConfig,
    max_multiplicities: Iterable[int],
    max_abs_hs: Iterable[int | None],
) -> list[SweepPoint]:
    """Census counts over the grid of bounds, multiplicity-major."""
    hs = list(max_abs_hs)
    points = []
    for max_multiplicity in max_multiplicities:
        for max_abs_h in hs:
            config = SearchConfig.model_validate(
                {
                    **base.model_dump(),
                    "max_multiplicity": max_multiplicity,
                    "max_abs_h": max_abs_h,
                }
            )
            census = run_census(config)
            points.append(
                SweepPoint(
                    max_multiplicity=max_multiplicity,
                    max_abs_h=max_abs_h,
                    total_examined=census.total_examined,
                    total_obstructed=census.total_obstructed,
                )
            )
    return points
