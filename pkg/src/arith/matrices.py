"""Smith normal form of small integer matrices."""

from collections.abc import Sequence
from math import gcd

from sympy import ZZ, Matrix
from sympy.matrices.normalforms import smith_normal_form


def _lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // gcd(a, b)


def _divisibility_chain(diagonal: list[int]) -> list[int]:
    # gcd/lcm sweep turns any diagonal presentation into d1 | d2 | ... (0 sorts last)
    factors = [abs(d) for d in diagonal]
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            a, b = factors[i], factors[j]
            factors[i], factors[j] = gcd(a, b), _lcm(a, b)
    return factors


def smith_invariant_factors(matrix: Sequence[Sequence[int]]) -> list[int]:
    """
    Invariant factors of the cokernel of an integer matrix.

    Returns d1 | d2 | ... with 0 standing for an infinite cyclic factor. Factors equal
    to 1 are dropped, so the trivial group gives [] and Z/6 gives [6].
    """
    rows = [list(row) for row in matrix]
    if not rows or not rows[0]:
        return []
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise ValueError("matrix must be rectangular")

    snf = smith_normal_form(Matrix(rows), domain=ZZ)
    diagonal = [int(snf[i, i]) for i in range(min(snf.shape))]
    # generators beyond the number of relations are free
    diagonal.extend([0] * (width - len(diagonal)))

    return [d for d in _divisibility_chain(diagonal) if d != 1]
