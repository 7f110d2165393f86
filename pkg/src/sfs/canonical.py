from src.sfs.models import CanonicalSeifertForm, InvalidFormError, SeifertForm


def canonicalize(form: SeifertForm) -> CanonicalSeifertForm:
    """
    Reduce every torque into (0, p), absorb integer fibres into the background and sort.

    The moves used (x_i += p_i, x_j -= p_j, and permutations) preserve both the
    oriented space and H.
    """
    background = 0
    exceptional = []
    for p, x in form.fibres:
        if p == 1:
            background += x
            continue
        beta = x % p
        if beta == 0:
            raise InvalidFormError(f"fibre ({p},{x}) is not a valid exceptional fibre")
        background += (x - beta) // p
        exceptional.append((p, beta))
    return CanonicalSeifertForm(exceptional=tuple(sorted(exceptional)), background=background)


def canonical_positions(form: SeifertForm) -> tuple[int, ...]:
    """1-based position in form of each exceptional fibre of canonicalize(form), in order."""
    keyed = [((p, x % p), i + 1) for i, (p, x) in enumerate(form.fibres) if p != 1]
    return tuple(position for _, position in sorted(keyed))


def reverse_orientation(form: SeifertForm) -> SeifertForm:
    return SeifertForm(fibres=tuple((p, -x) for p, x in form.fibres))


def mirror_canonical(form: CanonicalSeifertForm) -> CanonicalSeifertForm:
    """Canonical form of the orientation-reversed space."""
    return canonicalize(reverse_orientation(form.to_form()))
