from math import gcd
from typing import Any

from pydantic import BaseModel, ConfigDict, model_validator


class InvalidLensSpaceError(ValueError):
    """Raised when (p, q) does not describe a lens space."""

    pass


class LensSpace(BaseModel):
    """
    L(p,q), the result of -p/q surgery on the unknot; |p| is its multiplicity.

    (p,q) and (-p,-q) are the same oriented space, so p is stored non-negative.
    """

    model_config = ConfigDict(frozen=True)

    p: int
    q: int

    @model_validator(mode="before")
    @classmethod
    def _normalise_sign(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("p", 0) < 0:
            return {**data, "p": -data["p"], "q": -data["q"]}
        return data

    @model_validator(mode="after")
    def _check_coprime(self) -> "LensSpace":
        if self.p == 0:
            raise InvalidLensSpaceError("multiplicity must be non-zero")
        if gcd(self.p, self.q) != 1:
            raise InvalidLensSpaceError(f"L({self.p},{self.q}): p and q must be coprime")
        return self

    @classmethod
    def of(cls, p: int, q: int) -> "LensSpace":
        return cls(p=p, q=q)

    def reduced(self) -> "LensSpace":
        """Same oriented space with 0 <= q < p."""
        return LensSpace(p=self.p, q=self.q % self.p)

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"
