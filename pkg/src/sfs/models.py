from fractions import Fraction
from math import gcd

from pydantic import BaseModel, ConfigDict, model_validator


class InvalidFormError(ValueError):
    """Raised when fibre data is not a valid Seifert invariant."""

    pass


class NotSmallSeifertError(InvalidFormError):
    """Raised when a form does not have exactly three exceptional fibres."""

    pass


class FormParseError(InvalidFormError):
    """Raised when form text does not match the (p,x)(p,x)... grammar."""

    pass


Fibre = tuple[int, int]


def _check_fibre(p: int, x: int) -> None:
    if p < 1:
        raise InvalidFormError(f"fibre ({p},{x}): multiplicity must be >= 1")
    if p >= 2 and gcd(p, x) != 1:
        raise InvalidFormError(f"fibre ({p},{x}): multiplicity and torque must be coprime")


class SeifertForm(BaseModel):
    """
    An oriented Seifert fibred space over S^2 written S^2((p1,x1),(p2,x2),...).

    Torques are arbitrary representatives; a fibre with p = 1 is an integer
    fibre that canonicalisation absorbs.
    """

    model_config = ConfigDict(frozen=True)

    fibres: tuple[Fibre, ...]

    @model_validator(mode="after")
    def _check_fibres(self) -> "SeifertForm":
        if not self.fibres:
            raise InvalidFormError("a form needs at least one fibre")
        for p, x in self.fibres:
            _check_fibre(p, x)
        return self

    @classmethod
    def of(cls, *fibres: Fibre) -> "SeifertForm":
        return cls(fibres=tuple(fibres))

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.fibres)

    def euler_sum(self) -> Fraction:
        """Sum of x/p over all fibres, an invariant of the oriented space."""
        return sum((Fraction(x, p) for p, x in self.fibres), Fraction(0))

    def with_fibre(self, index: int, fibre: Fibre) -> "SeifertForm":
        fibres = list(self.fibres)
        fibres[index] = fibre
        return SeifertForm(fibres=tuple(fibres))

    def __str__(self) -> str:
        return "".join(f"({p},{x})" for p, x in self.fibres)


class CanonicalSeifertForm(BaseModel):
    """Exceptional fibres (p, beta) with 0 < beta < p, sorted, plus the background e0."""

    model_config = ConfigDict(frozen=True)

    exceptional: tuple[Fibre, ...]
    background: int = 0

    @model_validator(mode="after")
    def _check_reduced(self) -> "CanonicalSeifertForm":
        for p, beta in self.exceptional:
            if p < 2 or not 0 < beta < p:
                raise InvalidFormError(f"({p},{beta}) is not a reduced exceptional fibre")
            _check_fibre(p, beta)
        if list(self.exceptional) != sorted(self.exceptional):
            raise InvalidFormError("exceptional fibres must be sorted")
        return self

    def euler_sum(self) -> Fraction:
        return self.background + sum(
            (Fraction(beta, p) for p, beta in self.exceptional), Fraction(0)
        )

    def to_form(self) -> SeifertForm:
        """Representative with the background absorbed into the first exceptional fibre."""
        if not self.exceptional:
            return SeifertForm.of((1, self.background))
        (p, beta), *rest = self.exceptional
        return SeifertForm(fibres=((p, beta + self.background * p), *rest))

    def sort_key(self) -> tuple[tuple[Fibre, ...], int]:
        return self.exceptional, self.background

    def __str__(self) -> str:
        fibres = "".join(f"({p},{beta})" for p, beta in self.exceptional)
        return f"{fibres}[e0={self.background}]"
