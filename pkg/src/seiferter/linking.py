"""
Linking numbers, twisting and drilling for a seiferter.

Suppose m-surgery on K gives S^2((p1,x1),(p2,x2),(p3,x3)) with H != 0,
delta = sign(H) and epsilon = sign(m), so m = epsilon*delta*H. If the seiferter
has linking number l with K and becomes the fibre (p_i, x_i), then
q_i = (epsilon*delta*p_i*l^2 + p_j*p_k) / H; if it becomes an ordinary fibre,
n = (epsilon*delta*l^2 + p1*p2*p3) / H. When H = 0 the equations degenerate to
l^2 = p_j*p_k/p_i and l^2 = p1*p2*p3 with l != 0.
"""

from math import gcd, isqrt, prod

from src.arith import is_perfect_square
from src.common.logging import get_logger
from src.lens.models import LensSpace
from src.seiferter.models import DrillResult, FibreLabel, LinkingSolution, UnsolvableLinkingError
from src.seiferter.obstruction import three_fibres
from src.sfs import InvalidFormError, SeifertForm, h_invariant

logger = get_logger(__name__)


def _check_sign(slope_sign: int) -> None:
    if slope_sign not in (1, -1):
        raise ValueError(f"slope sign must be +1 or -1, got {slope_sign}")


def _fibre_position(form: SeifertForm, fibre: int) -> int:
    if not 1 <= fibre <= len(form.fibres):
        raise ValueError(f"fibre index {fibre} out of range 1..{len(form.fibres)}")
    return fibre - 1


def exceptional_q(form: SeifertForm, fibre: int, l: int, slope_sign: int) -> int | None:
    """q_i from the linking equation, or None when it is not an integer inverse of x_i."""
    index = _fibre_position(form, fibre)
    h = h_invariant(form)
    if h == 0:
        return None
    delta = 1 if h > 0 else -1
    p, x = form.fibres[index]
    others = prod(pj for j, pj in enumerate(form.multiplicities) if j != index)
    numerator = slope_sign * delta * p * l * l + others
    if numerator % h:
        return None
    q = numerator // h
    if (q * x - 1) % p:
        return None
    return q


def ordinary_n(form: SeifertForm, l: int, slope_sign: int) -> int | None:
    h = h_invariant(form)
    if h == 0:
        return None
    delta = 1 if h > 0 else -1
    numerator = slope_sign * delta * l * l + prod(form.multiplicities)
    if numerator % h:
        return None
    return numerator // h


def _zero_h_linking(form: SeifertForm, fibre: FibreLabel) -> int | None:
    p = form.multiplicities
    if fibre == "ordinary":
        square = prod(p)
    else:
        index = _fibre_position(form, fibre)
        others = prod(pj for j, pj in enumerate(p) if j != index)
        if others % p[index]:
            return None
        square = others // p[index]
    if square == 0 or not is_perfect_square(square):
        return None
    return isqrt(square)


def solve_linking(
    form: SeifertForm, fibre: FibreLabel, slope_sign: int, l_max: int
) -> list[LinkingSolution]:
    """Every linking number l in [0, l_max] solving the equation for this fibre and sign."""
    form = three_fibres(form)
    _check_sign(slope_sign)
    if l_max < 0:
        raise ValueError(f"l_max must be >= 0, got {l_max}")
    if fibre != "ordinary":
        _fibre_position(form, fibre)

    h = h_invariant(form)
    delta = 1 if h > 0 else -1
    slope = slope_sign * delta * h

    if h == 0:
        l = _zero_h_linking(form, fibre)
        if l is None or l > l_max:
            return []
        return [LinkingSolution(fibre=fibre, l=l, q_or_n=None, slope_sign=slope_sign, slope=0)]

    solutions = []
    for l in range(l_max + 1):
        if fibre == "ordinary":
            value = ordinary_n(form, l, slope_sign)
        else:
            value = exceptional_q(form, fibre, l, slope_sign)
        if value is not None:
            solutions.append(
                LinkingSolution(
                    fibre=fibre, l=l, q_or_n=value, slope_sign=slope_sign, slope=slope
                )
            )
    return solutions


def twist(form: SeifertForm, fibre: int, q: int, t: int) -> SeifertForm:
    """
    Twist t times along a seiferter that is the fibre (p, x) with fibre slope (p, q).

    The fibre becomes (t*q + p, t*(q*x - 1)/p + x); the others are unchanged.
    """
    index = _fibre_position(form, fibre)
    p, x = form.fibres[index]
    if (q * x - 1) % p:
        raise InvalidFormError(f"q={q} is not an inverse of {x} modulo {p}")
    new_p = t * q + p
    if new_p <= 0:
        raise InvalidFormError(f"twisting ({p},{x}) with t={t}, q={q} gives multiplicity {new_p}")
    return form.with_fibre(index, (new_p, t * ((q * x - 1) // p) + x))


def twist_ordinary(form: SeifertForm, n: int, t: int) -> SeifertForm:
    """Twist t times along an ordinary-fibre seiferter: appends the fibre (t*n + 1, -t)."""
    form = three_fibres(form)
    p = t * n + 1
    if p == 0:
        raise InvalidFormError(f"t={t}, n={n} gives a fibre of multiplicity 0")
    # (p, x) and (-p, -x) are the same fibre
    fibre = (p, -t) if p > 0 else (-p, t)
    return SeifertForm(fibres=(*form.fibres, fibre))


def heil_summands(form: SeifertForm, fibre: int) -> list[LensSpace]:
    """Drilling a fibre and refilling along the fibre slope leaves # L(p_j, x_j), j != i."""
    index = _fibre_position(form, fibre)
    return [LensSpace(p=p, q=x) for j, (p, x) in enumerate(form.fibres) if j != index]


def drill(form: SeifertForm, fibre: int, l: int, slope_sign: int) -> DrillResult:
    """
    Surgery on the seiferter along the fibre slope: the knot lands in L(q_i, p_i) and
    its induced surgery gives the connected sum of the remaining two fibres.
    """
    form = three_fibres(form)
    _check_sign(slope_sign)
    if l < 0:
        raise ValueError(f"linking number is reported non-negative, got {l}")
    if h_invariant(form) == 0:
        raise UnsolvableLinkingError(f"{form} has H = 0; the fibre slope is undetermined")

    q = exceptional_q(form, fibre, l, slope_sign)
    if q is None:
        raise UnsolvableLinkingError(
            f"no seiferter of {form} with linking number {l} becomes fibre {fibre} "
            f"at slope sign {slope_sign:+d}"
        )

    h = h_invariant(form)
    p = form.fibres[fibre - 1][0]
    summands = heil_summands(form, fibre)
    knot_class = l % abs(q)
    result = DrillResult(
        ambient=LensSpace(p=q, q=p),
        summands=(summands[0], summands[1]),
        source=form,
        fibre_index=fibre,
        linking=l,
        slope_sign=slope_sign,
        q=q,
        slope=slope_sign * (1 if h > 0 else -1) * h,
        knot_class=knot_class,
        null_homologous=knot_class == 0,
        primitive=gcd(l, q) == 1,
    )
    logger.info(
        "drill_completed",
        form=str(form),
        fibre=fibre,
        linking=l,
        ambient=str(result.ambient),
    )
    return result
