"""Exact colorability, chromatic and clique numbers, and criticality checks.

The q-colorability decision is a backtracking colorer over a dynamic
most-saturated-vertex order with color-symmetry breaking (a branch may open at
most one color beyond those already in use).  The chromatic number iterates
q upward from the clique number, which a branch-and-bound maximum-clique
search supplies.  Everything here is exact and aimed at dense graphs of at
most a dozen or so vertices; deletion subproblems are recomputed from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, bits


def is_q_colorable(g: Graph, q: int) -> Optional[tuple[int, ...]]:
    """A proper coloring with colors 1..q if one exists, else None."""
    if q < 0:
        raise ValueError("color count must be nonnegative")
    n = g.n
    if n == 0:
        return ()
    if q == 0:
        return None
    colors = [0] * n
    forbidden = [0] * n  # bit c set when color c+1 appears on a neighbor
    degrees = [g.degree(v) for v in range(n)]

    def pick() -> int:
        best_v = -1
        best_key = (-1, -1, 0)
        for v in range(n):
            if colors[v]:
                continue
            key = (forbidden[v].bit_count(), degrees[v], -v)
            if key > best_key:
                best_key = key
                best_v = v
        return best_v

    def extend(colored: int, used: int) -> bool:
        if colored == n:
            return True
        v = pick()
        # first unused color breaks symmetry: allow colors 1..min(q, used+1)
        avail = ~forbidden[v] & ((1 << min(q, used + 1)) - 1)
        for cbit in bits(avail):
            colors[v] = cbit + 1
            touched = []
            for u in bits(g.neighbors_mask(v)):
                if not colors[u] and not forbidden[u] >> cbit & 1:
                    forbidden[u] |= 1 << cbit
                    touched.append(u)
            if extend(colored + 1, max(used, cbit + 1)):
                return True
            for u in touched:
                forbidden[u] &= ~(1 << cbit)
            colors[v] = 0
        return False

    if not extend(0, 0):
        return None
    result = tuple(colors)
    # independent re-validation against every edge before handing it out
    if any(c < 1 or c > q for c in result):
        raise RuntimeError("internal error: color out of range")
    for u, v in g.edges():
        if result[u] == result[v]:
            raise RuntimeError("internal error: improper coloring produced")
    return result


def clique_number(g: Graph) -> int:
    """Exact size of a largest clique (0 for the empty graph)."""
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(size + 1, cand & g.neighbors_mask(v))

    expand(0, g.full_mask())
    return best


def chromatic_number(g: Graph) -> int:
    """Least q admitting a proper q-coloring; 0 for the empty graph."""
    if g.n == 0:
        return 0
    q = clique_number(g)
    while is_q_colorable(g, q) is None:
        q += 1
    return q


@dataclass(frozen=True)
class CriticalityReport:
    """Chromatic data of a graph against a criticality target k."""

    k: int
    chi: int
    omega: int
    per_vertex: tuple[int, ...]  # chi of the graph minus each vertex
    vertex_critical: bool


def is_k_vertex_critical(g: Graph, k: int) -> CriticalityReport:
    """Whether chi(g) = k and deleting any one vertex drops the chromatic
    number; the report always carries chi, omega and every chi(g - v)."""
    if k < 1:
        raise ValueError("criticality target must be at least 1")
    chi = chromatic_number(g)
    omega = clique_number(g)
    per_vertex = tuple(chromatic_number(g.delete_vertex(v)) for v in range(g.n))
    critical = chi == k and all(c < k for c in per_vertex)
    return CriticalityReport(k, chi, omega, per_vertex, critical)


def is_k_edge_critical(g: Graph, k: int) -> bool:
    """Whether chi(g) = k and deleting any one edge drops the chromatic number."""
    if k < 1:
        raise ValueError("criticality target must be at least 1")
    if chromatic_number(g) != k:
        return False
    return all(chromatic_number(g.delete_edge(u, v)) < k for u, v in g.edges())
