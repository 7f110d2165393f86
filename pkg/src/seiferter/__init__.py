from src.seiferter.linking import (
    drill,
    exceptional_q,
    heil_summands,
    ordinary_n,
    solve_linking,
    twist,
    twist_ordinary,
)
from src.seiferter.models import (
    Candidate,
    DrillResult,
    LinkingSolution,
    ObstructionIntegrityError,
    ObstructionReport,
    SeiferterRestriction,
    UnsolvableLinkingError,
)
from src.seiferter.obstruction import fibre_candidate, seiferter_restrictions, theorem2_check

__all__ = [
    "Candidate",
    "DrillResult",
    "LinkingSolution",
    "ObstructionIntegrityError",
    "ObstructionReport",
    "SeiferterRestriction",
    "UnsolvableLinkingError",
    "drill",
    "exceptional_q",
    "fibre_candidate",
    "heil_summands",
    "ordinary_n",
    "seiferter_restrictions",
    "solve_linking",
    "theorem2_check",
    "twist",
    "twist_ordinary",
]
