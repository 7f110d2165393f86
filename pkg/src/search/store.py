"""Census files: a JSON summary plus one JSON line per obstructed form."""

import json
from pathlib import Path
from typing import Any

from src.common.logging import get_logger
from src.search.models import Census

logger = get_logger(__name__)

SUMMARY_FILE = "summary.json"
RECORDS_FILE = "obstructed.jsonl"


# differ between runs of the same census
VOLATILE_FIELDS = frozenset({"run_id", "wall_time_ms"})


def census_summary(census: Census, *, include_volatile: bool = True) -> dict[str, Any]:
    """Summary document; without the volatile fields it is identical for identical censuses."""
    exclude = {"obstructed"} if include_volatile else {"obstructed", *VOLATILE_FIELDS}
    summary = census.model_dump(mode="json", exclude=exclude)
    # JSON object keys are strings; keep histograms keyed by profile as text
    summary["torque_profile_examined"] = {
        str(k): v for k, v in census.torque_profile_examined.items()
    }
    summary["torque_profile_obstructed"] = {
        str(k): v for k, v in census.torque_profile_obstructed.items()
    }
    return summary


def write_census(census: Census, directory: str | Path) -> Path:
    """Write summary.json and obstructed.jsonl into directory; returns the directory."""
    target = Path(directory)
    target.mkdir(parents=True, exist_ok=True)

    (target / SUMMARY_FILE).write_text(json.dumps(census_summary(census), indent=2) + "\n")
    with (target / RECORDS_FILE).open("w") as handle:
        for report in census.obstructed:
            handle.write(report.model_dump_json() + "\n")

    logger.info(
        "census_written",
        directory=str(target),
        records=len(census.obstructed),
    )
    return target


def read_census_summary(directory: str | Path) -> dict[str, Any]:
    return json.loads((Path(directory) / SUMMARY_FILE).read_text())


def read_census_records(directory: str | Path) -> list[dict[str, Any]]:
    path = Path(directory) / RECORDS_FILE
    with path.open() as handle:
        return [json.loads(line) for line in handle if line.strip()]
