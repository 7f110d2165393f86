"""The family S^2((p,-17),(2p-1,17),(2p+1,17)), p = 3 (mod 17), which has H = 17."""

from collections.abc import Iterable

from src.arith import mod_inverse
from src.search.models import Prop4Report
from src.seiferter import theorem2_check
from src.sfs import SeifertForm

MODULUS = 17
EXPECTED = (6, -6 % MODULUS, 7, 3)


def family_form(p: int) -> SeifertForm:
    return SeifertForm.of((p, -MODULUS), (2 * p - 1, MODULUS), (2 * p + 1, MODULUS))


def _inverse(x: int) -> int:
    inverse = mod_inverse(x, MODULUS)
    if inverse is None:
        raise ValueError(f"{x} is not invertible modulo {MODULUS}")
    return inverse


def family_residues(p: int) -> tuple[int, int, int, int]:
    """(4p^2-1)p*, (2p^2+p)(2p-1)*, (2p^2-p)(2p+1)*, 4p^3-p modulo 17; x* is the inverse."""
    return (
        (4 * p * p - 1) * _inverse(p) % MODULUS,
        (2 * p * p + p) * _inverse(2 * p - 1) % MODULUS,
        (2 * p * p - p) * _inverse(2 * p + 1) % MODULUS,
        (4 * p**3 - p) % MODULUS,
    )


def prop4_family_check(p_values: Iterable[int]) -> list[Prop4Report]:
    reports = []
    for p in p_values:
        if p < 2 or p % MODULUS != 3:
            raise ValueError(f"p must be >= 2 and congruent to 3 mod {MODULUS}, got {p}")
        report = theorem2_check(family_form(p))
        reports.append(
            Prop4Report(
                p=p,
                residues=family_residues(p),
                expected=EXPECTED,
                h=report.h,
                obstructed=report.obstructed,
            )
        )
    return reports
