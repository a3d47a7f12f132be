"""Certificates that a graph is not vertex-critical for any target.

Two checks: a comparable pair (nonadjacent vertices with nested
neighborhoods), and its generalization to dominated subset pairs: disjoint
nonempty X, Y that are anticomplete to each other, with chi(G[X]) <= chi(G[Y])
and Y complete to the open neighborhood of X.  Either certificate rules out
vertex-criticality; their absence within the searched bounds proves nothing,
since the subset search is size-capped for tractability.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .coloring import chromatic_number
from .graphs import Graph, components_within, induced_subgraph, open_set_neighborhood

MAX_SIDE = 4


def find_comparable_pair(g: Graph) -> Optional[tuple[int, int]]:
    """Least nonadjacent pair (u, v) with N(u) and N(v) nested, or None."""
    for u in range(g.n):
        mu = g.neighbors_mask(u)
        for v in range(u + 1, g.n):
            if mu >> v & 1:
                continue
            mv = g.neighbors_mask(v)
            # drop the other endpoint before the containment test: u in N(v)
            # is impossible here, but keep the masks symmetric anyway
            a = mu & ~(1 << v)
            b = mv & ~(1 << u)
            if a & ~b == 0 or b & ~a == 0:
                return (u, v)
    return None


@dataclass(frozen=True)
class DominatedPair:
    x: frozenset[int]
    y: frozenset[int]
    chi_x: int
    chi_y: int


def _mask(s) -> int:
    m = 0
    for v in s:
        m |= 1 << v
    return m


def find_dominated_pair(
    g: Graph, max_x: int = 2, max_y: int = 2
) -> Optional[DominatedPair]:
    """First dominated subset pair within the size bounds, or None.

    Returning a pair certifies that g is not k-vertex-critical for any k.
    None only means nothing was found with |X| <= max_x and |Y| <= max_y.
    X candidates are limited to sets spanning at most two connected pieces,
    which covers the component/vertex-pair shapes the certificate is used for
    while keeping the scan small.
    """
    if not (1 <= max_x <= MAX_SIDE and 1 <= max_y <= MAX_SIDE):
        raise ValueError(f"size bounds must lie in 1..{MAX_SIDE}")
    vertices = range(g.n)
    for xs in _bounded_subsets(vertices, max_x):
        if len(components_within(g, xs)) > 2:
            continue
        xm = _mask(xs)
        nx = open_set_neighborhood(g, xs)
        nxm = _mask(nx)
        chi_x = chromatic_number(induced_subgraph(g, xs))
        blocked = xm | nxm  # Y must avoid X and be nonadjacent to it
        for ys in _bounded_subsets(vertices, max_y):
            ym = _mask(ys)
            if ym & blocked:
                continue
            complete = all(g.neighbors_mask(y) & nxm == nxm for y in ys)
            if not complete:
                continue
            chi_y = chromatic_number(induced_subgraph(g, ys))
            if chi_x <= chi_y:
                return DominatedPair(frozenset(xs), frozenset(ys), chi_x, chi_y)
    return None


def _bounded_subsets(vertices, bound: int):
    for size in range(1, bound + 1):
        yield from combinations(vertices, size)
