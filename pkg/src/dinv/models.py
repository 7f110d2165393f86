from fractions import Fraction

from pydantic import BaseModel, ConfigDict, field_serializer


class DVectorSizeError(ValueError):
    """Raised when d-invariant multisets of different sizes are compared."""

    pass


class DVector(BaseModel):
    """Multiset of d-invariants, one exact rational per spin^c structure."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: tuple[Fraction, ...]

    @classmethod
    def of(cls, *values: Fraction | int | str) -> "DVector":
        return cls(values=tuple(Fraction(v) for v in values))

    def __len__(self) -> int:
        return len(self.values)

    def sorted_values(self) -> list[Fraction]:
        return sorted(self.values)

    def negated(self) -> "DVector":
        """d-invariants of the orientation-reversed space."""
        return DVector(values=tuple(-v for v in self.values))

    def shifted(self, amount: Fraction | int) -> "DVector":
        return DVector(values=tuple(v + amount for v in self.values))

    def same_multiset(self, other: "DVector") -> bool:
        return self.sorted_values() == other.sorted_values()

    @field_serializer("values")
    def _serialize_values(self, values: tuple[Fraction, ...]) -> list[str]:
        return [str(v) for v in sorted(values)]

    def __str__(self) -> str:
        return ", ".join(str(v) for v in self.sorted_values())


def parse_dvector(text: str) -> DVector:
    """Parse a comma-separated list of integers or fractions a/b."""
    try:
        return DVector.of(*(item.strip() for item in text.split(",") if item.strip()))
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"cannot parse d-invariants {text!r}: {e}") from e
