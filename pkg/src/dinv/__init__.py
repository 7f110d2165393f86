from src.dinv.lens_d import lens_d_invariants
from src.dinv.matching import even_difference_matching, integral_surgery_obstruction
from src.dinv.models import DVector, DVectorSizeError, parse_dvector

__all__ = [
    "DVector",
    "DVectorSizeError",
    "even_difference_matching",
    "integral_surgery_obstruction",
    "lens_d_invariants",
    "parse_dvector",
]
