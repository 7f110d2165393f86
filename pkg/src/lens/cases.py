"""
Arithmetic exclusions for knots in a lens space with a reducible surgery.

A non-hyperbolic knot with a surgery to L(s1,c1) # L(s2,c2) lies in a ball, is a
Klein bottle knot, a torus knot or a cable knot. Each predicate returns True when
the arithmetic leaves its case possible and False when it rules the case out.
"""

from collections.abc import Sequence
from math import gcd

from pydantic import BaseModel, ConfigDict

from src.lens.classify import equivalent_torques, lens_equivalent
from src.lens.models import LensSpace


class CaseReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    ball: bool
    klein: bool
    torus: bool
    cable: bool

    @property
    def all_excluded(self) -> bool:
        return not (self.ball or self.klein or self.torus or self.cable)


def ball_case_possible(ambient: LensSpace, summands: Sequence[LensSpace]) -> bool:
    """Every surgery on a knot in a ball keeps the ambient lens space as a summand."""
    return any(lens_equivalent(ambient, summand) for summand in summands)


def contains_klein_bottle(lens: LensSpace) -> bool:
    """Only L(4k, 2k-1) contains Klein bottles; either orientation is accepted."""
    if lens.p % 4:
        return False
    k = lens.p // 4
    return lens_equivalent(LensSpace(p=4 * k, q=2 * k - 1), lens, allow_reversal=True)


def two_fibre_multiplicity(p1: int, x1: int, p2: int, x2: int) -> int:
    """Multiplicity of the lens space S^2((p1,x1),(p2,x2))."""
    return abs(p1 * x2 + x1 * p2)


def torus_case_possible(n: int, first: LensSpace, second: LensSpace) -> bool:
    """
    Can a lens space of multiplicity n be S^2((s1,x1),(s2,x2)) with the given summands?

    Torques may be any representative of a class equivalent to the summand, so the
    question is whether +-n = s1*c2 + c1*s2 (mod s1*s2) for admissible classes.
    """
    s1, s2 = first.p, second.p
    if s1 < 2 or s2 < 2:
        raise ValueError("summand multiplicities must be >= 2")
    if gcd(s1, s2) != 1:
        raise ValueError(f"summand multiplicities {s1} and {s2} must be coprime")
    modulus = s1 * s2
    targets = {n % modulus, -n % modulus}
    return any(
        (s1 * c2 + c1 * s2) % modulus in targets
        for c1 in equivalent_torques(first)
        for c2 in equivalent_torques(second)
    )


def cable_surgery_order(n: int, p: int, q: int, x: int, r: int) -> int:
    """
    Determinant of [[q, p*r], [x*r, n]], the order (up to sign) of H_1 of q/p surgery
    on an r-stranded torus companion inside a lens space of multiplicity n.
    """
    return n * q - p * x * r * r


def cable_case_possible(n: int, s1: int, s2: int) -> bool:
    """
    Cable summand orders are +-p and +-(n*q - p*x*r^2); if p divides n it divides the
    other order too. The case is excluded when that fails for both assignments.
    """
    if s1 < 2 or s2 < 2:
        raise ValueError("summand multiplicities must be >= 2")
    if s1 == s2:
        raise ValueError("summand multiplicities must differ")
    excluded = all(
        n % si == 0 and sj % si != 0 for si, sj in ((s1, s2), (s2, s1))
    )
    return not excluded


def case_analysis(ambient: LensSpace, summands: Sequence[LensSpace]) -> CaseReport:
    """Evaluate all four cases; a case whose precondition fails is reported possible."""
    n = ambient.p
    first, second = summands
    s1, s2 = first.p, second.p

    torus = True
    if s1 >= 2 and s2 >= 2 and gcd(s1, s2) == 1:
        torus = torus_case_possible(n, first, second)

    cable = True
    if s1 >= 2 and s2 >= 2 and s1 != s2:
        cable = cable_case_possible(n, s1, s2)

    return CaseReport(
        ball=ball_case_possible(ambient, summands),
        klein=contains_klein_bottle(ambient),
        torus=torus,
        cable=cable,
    )
