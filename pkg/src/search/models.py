from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.seiferter.models import ObstructionReport


class InvalidSearchConfigError(ValueError):
    """Raised when a search request does not describe a finite universe."""

    pass


class TorqueFilter(str, Enum):
    ANY = "any"
    NO_PM1 = "no_pm1"
    AT_MOST_ONE_PM1 = "at_most_one_pm1"

    def accepts(self, profile: int) -> bool:
        if self is TorqueFilter.NO_PM1:
            return profile == 0
        if self is TorqueFilter.AT_MOST_ONE_PM1:
            return profile <= 1
        return True


class SearchConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_multiplicity: int = Field(12, ge=2)
    max_abs_h: int | None = Field(100, ge=0)
    max_abs_background: int | None = Field(None, ge=0)
    torque_filter: TorqueFilter = TorqueFilter.ANY
    require_cyclic: bool = True
    merge_mirrors: bool = False
    worker_count: int = Field(1, ge=1)

    @model_validator(mode="after")
    def _check_bounded(self) -> "SearchConfig":
        if self.max_abs_h is None and self.max_abs_background is None:
            raise InvalidSearchConfigError(
                "unbounded search: set max_abs_h or max_abs_background"
            )
        return self


class Census(BaseModel):
    model_config = ConfigDict(frozen=True)

    config: SearchConfig
    run_id: str | None = None
    total_examined: int = 0
    total_obstructed: int = 0
    obstructed: tuple[ObstructionReport, ...] = ()
    torque_profile_examined: dict[int, int] = Field(default_factory=dict)
    torque_profile_obstructed: dict[int, int] = Field(default_factory=dict)
    wall_time_ms: int = 0

    @model_validator(mode="after")
    def _check_totals(self) -> "Census":
        if self.total_obstructed != len(self.obstructed):
            raise ValueError("total_obstructed must equal the number of obstructed reports")
        if self.total_obstructed > self.total_examined:
            raise ValueError("cannot obstruct more forms than were examined")
        return self

    def counts(self) -> tuple[int, int]:
        return self.total_examined, self.total_obstructed


class SweepPoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_multiplicity: int
    max_abs_h: int | None
    total_examined: int
    total_obstructed: int


class Prop4Report(BaseModel):
    """The four residues mod 17 for one member of the obstructed family."""

    model_config = ConfigDict(frozen=True)

    p: int
    residues: tuple[int, int, int, int]
    expected: tuple[int, int, int, int]
    h: int
    obstructed: bool

    @property
    def holds(self) -> bool:
        return self.residues == self.expected and self.h == 17 and self.obstructed
