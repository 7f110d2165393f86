"""Modular arithmetic primitives: inverses, squares and quadratic residues."""

from math import isqrt

from sympy import factorint
from sympy.ntheory.residue_ntheory import is_quad_residue

from src.arith.models import Factorization
from src.common.config import get_settings


def mod_inverse(a: int, n: int) -> int | None:
    """Return r in [0, n) with a*r = 1 (mod n), or None when gcd(a, n) != 1."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    if n == 1:
        return 0
    try:
        return pow(a, -1, n)
    except ValueError:
        return None


def is_perfect_square(a: int) -> bool:
    if a < 0:
        return False
    root = isqrt(a)
    return root * root == a


def factorize(n: int) -> Factorization:
    """Exact prime factorisation (sympy: trial division, Pollard rho, Miller-Rabin)."""
    if n < 1:
        raise ValueError(f"can only factor positive integers, got {n}")
    powers = sorted((int(p), int(e)) for p, e in factorint(n).items())
    return Factorization(prime_powers=tuple(powers))


def _is_residue_prime_power(a: int, p: int, k: int) -> bool:
    modulus = p**k
    a %= modulus
    if a == 0:
        return True

    # a = p^v * u with u a unit; x^2 = a forces v even and u a square mod p^(k-v)
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    if v % 2:
        return False

    remaining = k - v
    if p == 2:
        if remaining == 1:
            return True
        if remaining == 2:
            return a % 4 == 1
        return a % 8 == 1
    return bool(is_quad_residue(a % p, p))


def is_quadratic_residue_scan(a: int, n: int) -> bool:
    """Brute-force scan of x^2 mod n; only allowed up to the configured modulus bound."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    limit = get_settings().brute_force_limit
    if n > limit:
        raise ValueError(f"modulus {n} exceeds brute-force limit {limit}")
    a %= n
    return any(x * x % n == a for x in range(n))


def is_quadratic_residue(a: int, n: int, *, brute_force: bool = False) -> bool:
    """True iff x^2 = a (mod n) has a solution; 0 counts as a residue."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    if brute_force:
        return is_quadratic_residue_scan(a, n)
    if n == 1:
        return True
    # CRT: a square modulo n iff a square modulo every prime power of n
    return all(_is_residue_prime_power(a, p, k) for p, k in factorize(n).prime_powers)
