"""Even-difference matching of d-invariants and the integral surgery test."""

from fractions import Fraction

import networkx as nx
from networkx.algorithms import bipartite

from src.dinv.lens_d import lens_d_invariants
from src.dinv.models import DVector, DVectorSizeError


def _even_integer(value: Fraction) -> bool:
    return value.denominator == 1 and value.numerator % 2 == 0


def even_difference_matching(a: DVector, b: DVector) -> bool:
    """
    Is there a bijection a -> b with every difference an even integer?

    Maximum bipartite matching (Hopcroft-Karp) on the compatibility graph.
    """
    if len(a) != len(b):
        raise DVectorSizeError(f"cannot match {len(a)} values against {len(b)}")
    if not len(a):
        return True

    left = [("a", i) for i in range(len(a))]
    right = [("b", j) for j in range(len(b))]
    graph = nx.Graph()
    graph.add_nodes_from(left, bipartite=0)
    graph.add_nodes_from(right, bipartite=1)
    graph.add_edges_from(
        (("a", i), ("b", j))
        for i, x in enumerate(a.values)
        for j, y in enumerate(b.values)
        if _even_integer(x - y)
    )
    matching = bipartite.hopcroft_karp_matching(graph, top_nodes=left)
    # the matching dict holds both directions
    return len(matching) // 2 == len(a)


def integral_surgery_obstruction(d: DVector, n: int) -> bool:
    """
    True when no knot in S^3 has an integral surgery with these d-invariants and
    |H_1| = n: they must match L(n,1) or its mirror up to even integers.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if len(d) != n:
        raise DVectorSizeError(f"expected {n} d-invariants, got {len(d)}")
    model = lens_d_invariants(n, 1)
    return not (
        even_difference_matching(d, model) or even_difference_matching(d, model.negated())
    )
