from src.search.census import bound_sweep, check_block, run_census
from src.search.enumerate import background_range, enumerate_forms, exceptional_pairs
from src.search.family import family_form, family_residues, prop4_family_check
from src.search.models import (
    Census,
    InvalidSearchConfigError,
    Prop4Report,
    SearchConfig,
    SweepPoint,
    TorqueFilter,
)
from src.search.store import read_census_records, read_census_summary, write_census

__all__ = [
    "Census",
    "InvalidSearchConfigError",
    "Prop4Report",
    "SearchConfig",
    "SweepPoint",
    "TorqueFilter",
    "background_range",
    "bound_sweep",
    "check_block",
    "enumerate_forms",
    "exceptional_pairs",
    "family_form",
    "family_residues",
    "prop4_family_check",
    "read_census_records",
    "read_census_summary",
    "run_census",
    "write_census",
]
