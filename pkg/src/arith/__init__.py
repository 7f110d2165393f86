from src.arith.matrices import smith_invariant_factors
from src.arith.modular import (
    factorize,
    is_perfect_square,
    is_quadratic_residue,
    is_quadratic_residue_scan,
    mod_inverse,
)
from src.arith.models import Factorization

__all__ = [
    "Factorization",
    "factorize",
    "is_perfect_square",
    "is_quadratic_residue",
    "is_quadratic_residue_scan",
    "mod_inverse",
    "smith_invariant_factors",
]
