#!/usr/bin/env python
"""
Freeze the golden censuses used as regression artifacts.
Run: python -m scripts.freeze_golden

Writes, under tests/golden/:
- census_p3_h10  (max multiplicity 3, |H| <= 10)
- census_p6_h50  (max multiplicity 6, |H| <= 50)
- census_p12_h100 (the documented default bounds; only with --full)
"""

import sys
from pathlib import Path

from src.common.logging import setup_logging
from src.search import SearchConfig, run_census, write_census

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "tests" / "golden"

# =============================================================================
# GOLDEN BOUNDS
# =============================================================================

GOLDEN = {
    "census_p3_h10": SearchConfig(max_multiplicity=3, max_abs_h=10),
    "census_p6_h50": SearchConfig(max_multiplicity=6, max_abs_h=50),
}

FULL = {
    "census_p12_h100": SearchConfig(max_multiplicity=12, max_abs_h=100, worker_count=4),
}


def freeze(name: str, config: SearchConfig) -> None:
    print(f"Running {name}...")
    census = run_census(config)
    write_census(census, GOLDEN_DIR / name)
    print(f"  examined {census.total_examined}, obstructed {census.total_obstructed}")


def main() -> None:
    setup_logging()
    targets = dict(GOLDEN)
    if "--full" in sys.argv[1:]:
        targets.update(FULL)

    print("=" * 60)
    print("Freezing golden censuses")
    print("=" * 60)
    for name, config in targets.items():
        freeze(name, config)
    print(f"\nWritten to {GOLDEN_DIR}")


if __name__ == "__main__":
    main()
