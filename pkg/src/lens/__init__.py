from src.lens.cases import (
    CaseReport,
    ball_case_possible,
    cable_case_possible,
    cable_surgery_order,
    case_analysis,
    contains_klein_bottle,
    torus_case_possible,
    two_fibre_multiplicity,
)
from src.lens.classify import equivalent_torques, lens_equivalent
from src.lens.models import InvalidLensSpaceError, LensSpace

__all__ = [
    "CaseReport",
    "InvalidLensSpaceError",
    "LensSpace",
    "ball_case_possible",
    "cable_case_possible",
    "cable_surgery_order",
    "case_analysis",
    "contains_klein_bottle",
    "equivalent_torques",
    "lens_equivalent",
    "torus_case_possible",
    "two_fibre_multiplicity",
]
