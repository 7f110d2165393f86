from src.arith import mod_inverse
from src.lens.models import LensSpace


def _torque_classes(lens: LensSpace, allow_reversal: bool) -> set[int]:
    p = lens.p
    q = lens.q % p
    q_inverse = mod_inverse(q, p)
    classes = {q, q_inverse if q_inverse is not None else q}
    if allow_reversal:
        classes |= {-c % p for c in classes}
    return classes


def lens_equivalent(a: LensSpace, b: LensSpace, allow_reversal: bool = False) -> bool:
    """
    Homeomorphism test: |p| equal and q' = q^{+1 or -1} (mod p).

    With allow_reversal also q' = -q^{+1 or -1}, i.e. orientation-reversing maps.
    """
    if a.p != b.p:
        return False
    return b.q % b.p in _torque_classes(a, allow_reversal)


def equivalent_torques(lens: LensSpace, allow_reversal: bool = False) -> set[int]:
    """All c in [0, p) with L(p, c) equivalent to the given lens space."""
    return _torque_classes(lens, allow_reversal)
