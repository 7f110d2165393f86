"""
Enumeration of canonical small Seifert forms.

The universe is every sorted triple of reduced exceptional fibres (p, beta),
0 < beta < p, gcd(p, beta) = 1, p <= max_multiplicity, together with a background
e0 bounded through |H| and/or |e0|. Each oriented space appears exactly once and
the stream is in lexicographic order of (triple, e0).
"""

from collections.abc import Iterator
from math import gcd

from src.search.models import SearchConfig
from src.sfs import CanonicalSeifertForm, h1_is_cyclic, mirror_canonical, torque_profile

Fibre = tuple[int, int]


def exceptional_pairs(max_multiplicity: int) -> list[Fibre]:
    return [
        (p, beta)
        for p in range(2, max_multiplicity + 1)
        for beta in range(1, p)
        if gcd(p, beta) == 1
    ]


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def background_range(triple: tuple[Fibre, ...], config: SearchConfig) -> range:
    """All e0 allowed for this triple; H = P*e0 + S with P = p1p2p3."""
    total = 1
    for p, _ in triple:
        total *= p
    partial = sum(beta * (total // p) for p, beta in triple)

    lo, hi = None, None
    if config.max_abs_h is not None:
        bound = config.max_abs_h
        lo = _ceil_div(-bound - partial, total)
        hi = (bound - partial) // total
    if config.max_abs_background is not None:
        bound = config.max_abs_background
        lo = -bound if lo is None else max(lo, -bound)
        hi = bound if hi is None else min(hi, bound)
    if lo is None or hi is None:
        return range(0)
    return range(lo, hi + 1)


def _in_universe(form: CanonicalSeifertForm, config: SearchConfig) -> bool:
    if form.exceptional[-1][0] > config.max_multiplicity:
        return False
    return form.background in background_range(form.exceptional, config)


def _accepted(form: CanonicalSeifertForm, config: SearchConfig) -> bool:
    if config.merge_mirrors:
        mirror = mirror_canonical(form)
        if _in_universe(mirror, config) and mirror.sort_key() < form.sort_key():
            return False
    if not config.torque_filter.accepts(torque_profile(form)):
        return False
    if config.require_cyclic and not h1_is_cyclic(form):
        return False
    return True


def leading_fibres(config: SearchConfig) -> list[Fibre]:
    """Block keys: the first fibre of the canonical triple."""
    return exceptional_pairs(config.max_multiplicity)


def enumerate_block(config: SearchConfig, leading: Fibre) -> Iterator[CanonicalSeifertForm]:
    pairs = exceptional_pairs(config.max_multiplicity)
    start = pairs.index(leading)
    for j in range(start, len(pairs)):
        for k in range(j, len(pairs)):
            triple = (leading, pairs[j], pairs[k])
            for background in background_range(triple, config):
                form = CanonicalSeifertForm(exceptional=triple, background=background)
                if _accepted(form, config):
                    yield form


def enumerate_forms(config: SearchConfig) -> Iterator[CanonicalSeifertForm]:
    for leading in leading_fibres(config):
        yield from enumerate_block(config, leading)
