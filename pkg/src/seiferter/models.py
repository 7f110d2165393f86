from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, field_serializer, model_validator

from src.lens.models import LensSpace
from src.sfs.models import CanonicalSeifertForm, SeifertForm

FibreLabel = int | Literal["ordinary"]
Sign = Literal["+", "-"]


class UnsolvableLinkingError(LookupError):
    """Raised when no linking number solves the fibre equations for the requested data."""

    pass


class ObstructionIntegrityError(ArithmeticError):
    """Raised when p_i does not divide q_i*H - p_j*p_k, which the fibre identity forbids."""

    pass


def _render(value: int | Fraction) -> int | str:
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    return value


class Candidate(BaseModel):
    """One quantity that must be a quadratic residue modulo H (or a square when H = 0)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    label: FibreLabel
    sign: Sign
    value: int | Fraction

    @field_serializer("value")
    def _serialize_value(self, value: int | Fraction) -> int | str:
        return _render(value)


class ObstructionReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    form: SeifertForm
    canonical: CanonicalSeifertForm
    h: int
    candidates: tuple[Candidate, ...]
    residue_hits: tuple[Candidate, ...]
    obstructed: bool

    @model_validator(mode="after")
    def _check_verdict(self) -> "ObstructionReport":
        if self.obstructed != (not self.residue_hits):
            raise ValueError("obstructed must hold exactly when no candidate is a residue")
        return self

    @field_serializer("form")
    def _serialize_form(self, form: SeifertForm) -> str:
        return str(form)


class SeiferterRestriction(BaseModel):
    """Obstruction condition for a seiferter becoming a given fibre at a given slope sign."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    fibre: FibreLabel
    slope_sign: int
    value: int | Fraction
    satisfied: bool

    @field_serializer("value")
    def _serialize_value(self, value: int | Fraction) -> int | str:
        return _render(value)


class LinkingSolution(BaseModel):
    """
    A linking number l of seiferter and knot solving the fibre equation.

    q_or_n is q_i for an exceptional fibre and n for an ordinary one; both are
    undetermined when H = 0.
    """

    model_config = ConfigDict(frozen=True)

    fibre: FibreLabel
    l: int
    q_or_n: int | None
    slope_sign: int
    slope: int


class DrillResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    ambient: LensSpace
    summands: tuple[LensSpace, LensSpace]
    source: SeifertForm
    fibre_index: int
    linking: int
    slope_sign: int
    q: int
    slope: int
    knot_class: int
    null_homologous: bool
    primitive: bool

    @field_serializer("source")
    def _serialize_source(self, source: SeifertForm) -> str:
        return str(source)
