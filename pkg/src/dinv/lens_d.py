"""
d-invariants of lens spaces by the recursion

    d(1, 0, 0) = 0
    d(p, q, i) = (2i + 1 - p - q)^2 / (4pq) - 1/4 - d(q, p mod q, i mod q)

for 0 < q < p coprime and 0 <= i < p. The recursion is taken with respect to
L(p,q) as -p/q surgery on the unknot; the reverse orientation has the negated
multiset, which is also L(p, p - q).
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

from src.dinv.models import DVector
from src.lens.models import InvalidLensSpaceError


@lru_cache(maxsize=65536)
def _d(p: int, q: int, i: int) -> Fraction:
    if p == 1:
        return Fraction(0)
    head = Fraction((2 * i + 1 - p - q) ** 2, 4 * p * q) - Fraction(1, 4)
    return head - _d(q, p % q, i % q)


def lens_d_invariants(p: int, q: int) -> DVector:
    if p < 1:
        raise InvalidLensSpaceError(f"multiplicity must be >= 1, got {p}")
    if gcd(p, q) != 1:
        raise InvalidLensSpaceError(f"L({p},{q}): p and q must be coprime")
    q %= p
    if p == 1:
        return DVector(values=(Fraction(0),))
    return DVector(values=tuple(_d(p, q, i) for i in range(p)))
