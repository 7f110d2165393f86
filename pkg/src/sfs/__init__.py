from src.sfs.canonical import (
    canonical_positions,
    canonicalize,
    mirror_canonical,
    reverse_orientation,
)
from src.sfs.invariants import (
    h1_invariant_factors,
    h1_is_cyclic,
    h_invariant,
    is_rational_homology_sphere,
    relation_matrix,
    torque_profile,
)
from src.sfs.models import (
    CanonicalSeifertForm,
    FormParseError,
    InvalidFormError,
    NotSmallSeifertError,
    SeifertForm,
)
from src.sfs.parse import format_form, parse_form

__all__ = [
    "CanonicalSeifertForm",
    "FormParseError",
    "InvalidFormError",
    "NotSmallSeifertError",
    "SeifertForm",
    "canonical_positions",
    "canonicalize",
    "format_form",
    "h1_invariant_factors",
    "h1_is_cyclic",
    "h_invariant",
    "is_rational_homology_sphere",
    "mirror_canonical",
    "parse_form",
    "relation_matrix",
    "reverse_orientation",
    "torque_profile",
]
