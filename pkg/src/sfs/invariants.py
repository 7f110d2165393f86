"""Homological invariants of Seifert forms."""

from math import prod

from src.arith import smith_invariant_factors
from src.sfs.models import CanonicalSeifertForm, SeifertForm

AnyForm = SeifertForm | CanonicalSeifertForm


def _as_form(form: AnyForm) -> SeifertForm:
    if isinstance(form, CanonicalSeifertForm):
        return form.to_form()
    return form


def h_invariant(form: AnyForm) -> int:
    """H = sum_i x_i * prod_{j != i} p_j; for three fibres p1p2x3 + p1p3x2 + p2p3x1."""
    fibres = _as_form(form).fibres
    total = 0
    for i, (_, x) in enumerate(fibres):
        total += x * prod(p for j, (p, _) in enumerate(fibres) if j != i)
    return total


def is_rational_homology_sphere(form: AnyForm) -> bool:
    return h_invariant(form) != 0


def relation_matrix(form: AnyForm) -> list[list[int]]:
    """
    Presentation of H_1 on generators g_1..g_n, h.

    Rows are p_i*g_i + x_i*h = 0 followed by g_1 + ... + g_n = 0.
    """
    fibres = _as_form(form).fibres
    n = len(fibres)
    rows = []
    for i, (p, x) in enumerate(fibres):
        row = [0] * (n + 1)
        row[i] = p
        row[n] = x
        rows.append(row)
    rows.append([1] * n + [0])
    return rows


def h1_invariant_factors(form: AnyForm) -> list[int]:
    return smith_invariant_factors(relation_matrix(form))


def h1_is_cyclic(form: AnyForm) -> bool:
    return len(h1_invariant_factors(form)) <= 1


def torque_profile(form: AnyForm) -> int:
    """Number of exceptional fibres whose torque is +1 or -1 modulo the multiplicity."""
    return sum(
        1 for p, x in _as_form(form).fibres if p >= 2 and x % p in (1, p - 1)
    )
