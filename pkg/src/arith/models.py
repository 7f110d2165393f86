from math import prod

from pydantic import BaseModel, ConfigDict, model_validator


class Factorization(BaseModel):
    """Prime factorisation of a positive integer as (prime, exponent) pairs."""

    model_config = ConfigDict(frozen=True)

    prime_powers: tuple[tuple[int, int], ...] = ()

    @model_validator(mode="after")
    def _check_order(self) -> "Factorization":
        primes = [p for p, _ in self.prime_powers]
        if any(a >= b for a, b in zip(primes, primes[1:])):
            raise ValueError("primes must be strictly increasing")
        if any(e < 1 or p < 2 for p, e in self.prime_powers):
            raise ValueError("primes must be >= 2 and exponents >= 1")
        return self

    @property
    def value(self) -> int:
        return prod(p**e for p, e in self.prime_powers)
