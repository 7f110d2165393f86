"""Quadratic-residue obstruction for surgeries with a seiferter."""

from fractions import Fraction
from math import prod

from src.arith import is_perfect_square, is_quadratic_residue, mod_inverse
from src.seiferter.models import (
    Candidate,
    FibreLabel,
    ObstructionIntegrityError,
    ObstructionReport,
    SeiferterRestriction,
)
from src.sfs import (
    CanonicalSeifertForm,
    InvalidFormError,
    NotSmallSeifertError,
    SeifertForm,
    canonicalize,
    h_invariant,
)


def three_fibres(form: SeifertForm | CanonicalSeifertForm) -> SeifertForm:
    if isinstance(form, CanonicalSeifertForm):
        form = form.to_form()
    if len(form.fibres) != 3:
        raise InvalidFormError(f"{form} must have exactly three fibres")
    return form


def fibre_candidate(form: SeifertForm, index: int, h: int) -> int:
    """
    (q_i*H - p_j*p_k) / p_i for the least non-negative inverse q_i of x_i mod p_i.

    index is 0-based. Exact because q_i*H = q_i*x_i*p_j*p_k = p_j*p_k (mod p_i).
    """
    p, x = form.fibres[index]
    others = _others(form.multiplicities, index)
    q = mod_inverse(x, p)
    if q is None:
        raise InvalidFormError(f"torque {x} is not invertible modulo {p}")
    numerator = q * h - others
    if numerator % p:
        raise ObstructionIntegrityError(f"{p} does not divide {numerator} for {form}")
    return numerator // p


def _others(multiplicities: tuple[int, ...], index: int) -> int:
    return prod(p for j, p in enumerate(multiplicities) if j != index)


def _zero_h_candidates(form: SeifertForm) -> list[Candidate]:
    p = form.multiplicities
    candidates = [
        Candidate(label=i + 1, sign="+", value=_exact(_others(p, i), p[i])) for i in range(3)
    ]
    candidates.append(Candidate(label="ordinary", sign="+", value=prod(p)))
    return candidates


def _exact(numerator: int, denominator: int) -> int | Fraction:
    value = Fraction(numerator, denominator)
    return value.numerator if value.denominator == 1 else value


def _is_square_value(value: int | Fraction) -> bool:
    return isinstance(value, int) and is_perfect_square(value)


def theorem2_check(form: SeifertForm | CanonicalSeifertForm) -> ObstructionReport:
    """
    Decide whether a small Seifert fibred space is obstructed from being a surgery
    with a seiferter.

    For H != 0 the candidates are +-(q_i*H - p_j*p_k)/p_i and +-p1*p2*p3 reduced
    mod |H|; for H = 0 they are p_j*p_k/p_i and p1*p2*p3, which must be squares.
    The space is obstructed when no candidate passes. Evaluated on the canonical
    form, so the verdict does not depend on the representative; candidate labels
    are fibre positions in that form (see canonical_positions for the input order).
    """
    if isinstance(form, CanonicalSeifertForm):
        canonical = form
        form = canonical.to_form()
    else:
        canonical = canonicalize(form)
    if len(canonical.exceptional) != 3:
        raise NotSmallSeifertError(
            f"{form} has {len(canonical.exceptional)} exceptional fibres, expected 3"
        )

    representative = canonical.to_form()
    h = h_invariant(representative)

    if h == 0:
        candidates = _zero_h_candidates(representative)
        hits = [c for c in candidates if _is_square_value(c.value)]
    else:
        modulus = abs(h)
        candidates = []
        for i in range(3):
            value = fibre_candidate(representative, i, h)
            candidates.append(Candidate(label=i + 1, sign="+", value=value % modulus))
            candidates.append(Candidate(label=i + 1, sign="-", value=-value % modulus))
        total = prod(representative.multiplicities)
        candidates.append(Candidate(label="ordinary", sign="+", value=total % modulus))
        candidates.append(Candidate(label="ordinary", sign="-", value=-total % modulus))
        hits = [c for c in candidates if is_quadratic_residue(int(c.value), modulus)]

    return ObstructionReport(
        form=form,
        canonical=canonical,
        h=h,
        candidates=tuple(candidates),
        residue_hits=tuple(hits),
        obstructed=not hits,
    )


def seiferter_restrictions(form: SeifertForm | CanonicalSeifertForm) -> list[SeiferterRestriction]:
    """
    Slope-sign resolved conditions, one per (fibre, slope sign).

    With delta = sign(H) and c_i as in fibre_candidate: an exceptional fibre needs
    delta*c_i (positive slope) or -delta*c_i (negative slope) to be a residue mod |H|;
    an ordinary fibre needs -delta*p1p2p3 or delta*p1p2p3. When H = 0 the conditions
    p_j*p_k/p_i and p1p2p3 being squares do not depend on the slope.
    """
    form = three_fibres(form)
    h = h_invariant(form)
    total = prod(form.multiplicities)
    restrictions = []

    if h == 0:
        for candidate in _zero_h_candidates(form):
            for slope_sign in (1, -1):
                restrictions.append(
                    SeiferterRestriction(
                        fibre=candidate.label,
                        slope_sign=slope_sign,
                        value=candidate.value,
                        satisfied=_is_square_value(candidate.value),
                    )
                )
        return restrictions

    modulus = abs(h)
    delta = 1 if h > 0 else -1
    conditions: list[tuple[FibreLabel, int, int]] = []
    for i in range(3):
        c = fibre_candidate(form, i, h)
        conditions += [(i + 1, 1, delta * c), (i + 1, -1, -delta * c)]
    conditions += [("ordinary", 1, -delta * total), ("ordinary", -1, delta * total)]

    for fibre, slope_sign, value in conditions:
        residue = value % modulus
        restrictions.append(
            SeiferterRestriction(
                fibre=fibre,
                slope_sign=slope_sign,
                value=residue,
                satisfied=is_quadratic_residue(residue, modulus),
            )
        )
    return restrictions
