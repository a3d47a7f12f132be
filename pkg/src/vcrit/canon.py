"""Canonical labeling by partition refinement with backtracking.

The canonical form of a graph is the lexicographically smallest upper-triangle
adjacency encoding (column-major bit order, matching graph6) reachable by
individualization-refinement: refine an ordered partition by neighbor counts
until stable, then branch on the first non-singleton cell.  Cell order after a
split is decided by the (label-independent) count signatures, so isomorphic
graphs explore the same tree and reach the same minimum.

Discovered automorphisms prune sibling branches: a candidate is skipped when a
known automorphism fixing every previously individualized vertex maps it onto
an already-explored sibling.  The same machinery answers vertex-orbit queries
needed by the isomorph-free generator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formats import emit_graph6
from .graphs import Graph

_MAX_STORED_AUTS = 200


def _refine(adj: tuple[int, ...], partition: list[list[int]]) -> list[list[int]]:
    """Split cells by per-cell neighbor counts until the partition is stable."""
    while True:
        masks = []
        for cell in partition:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        changed = False
        for cell in partition:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    out.append(groups[sig])
        if not changed:
            return out
        partition = out


@dataclass
class CanonResult:
    encoding: int          # upper-triangle bits under the canonical labeling
    labeling: list[int]    # position -> original vertex
    automorphisms: list[list[int]]  # generators discovered during the search


def _canonical_search(g: Graph, initial: list[list[int]]) -> CanonResult:
    adj = g._adj
    n = g.n
    width = n * (n - 1) // 2
    best_enc: int | None = None
    best_lab: list[int] | None = None
    auts: list[list[int]] = []

    def prefix_encoding(order: list[int]) -> int:
        enc = 0
        for j in range(1, len(order)):
            vj = order[j]
            for i in range(j):
                enc = enc << 1 | (adj[order[i]] >> vj & 1)
        return enc

    def search(partition: list[list[int]], fixed: list[int]) -> None:
        nonlocal best_enc, best_lab
        partition = _refine(adj, partition)
        order = []
        for cell in partition:
            if len(cell) != 1:
                break
            order.append(cell[0])
        p = len(order)
        pre = prefix_encoding(order)
        if best_enc is not None:
            pw = p * (p - 1) // 2
            if pre > best_enc >> (width - pw):
                return
        if p == n:
            if best_enc is None or pre < best_enc:
                best_enc = pre
                best_lab = order
            elif pre == best_enc and len(auts) < _MAX_STORED_AUTS:
                sigma = [0] * n
                for pos in range(n):
                    sigma[best_lab[pos]] = order[pos]
                if sigma != list(range(n)):
                    auts.append(sigma)
            return
        ci = next(i for i, c in enumerate(partition) if len(c) > 1)
        cell = sorted(partition[ci])
        tried: list[int] = []
        for v in cell:
            skip = False
            for sigma in auts:
                if sigma[v] in tried and all(sigma[f] == f for f in fixed):
                    skip = True
                    break
            if skip:
                continue
            tried.append(v)
            branch = (
                partition[:ci]
                + [[v], [u for u in cell if u != v]]
                + partition[ci + 1 :]
            )
            search(branch, fixed + [v])

    if n == 0:
        return CanonResult(0, [], [])
    search(initial, [])
    assert best_lab is not None
    return CanonResult(best_enc, best_lab, auts)


def canonicalize(g: Graph) -> CanonResult:
    """Full canonicalization result for the unrooted graph."""
    return _canonical_search(g, [list(range(g.n))])


def rooted_encoding(g: Graph, root: int) -> int:
    """Canonical encoding with the root distinguished; equal encodings for two
    roots certify an automorphism mapping one to the other."""
    rest = [v for v in range(g.n) if v != root]
    res = _canonical_search(g, [[root]] + ([rest] if rest else []))
    return res.encoding


def canonical_labeling(g: Graph) -> list[int]:
    return canonicalize(g).labeling


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled copy of g."""
    lab = canonicalize(g).labeling
    pos = [0] * g.n
    for i, v in enumerate(lab):
        pos[v] = i
    return g.permuted(pos)


def canonical_form(g: Graph) -> bytes:
    """Canonical byte string: graph6 of the canonically relabeled graph."""
    return emit_graph6(canonical_graph(g)).encode("ascii")


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    return canonicalize(g).encoding == canonicalize(h).encoding


def orbit_partition(n: int, automorphisms: list[list[int]]) -> list[int]:
    """Union-find roots of the vertex orbits generated by the given maps.

    Orbits may be coarser than reported here (the generators are whatever the
    canonical search stumbled on), so equality of roots proves two vertices
    equivalent while inequality proves nothing.
    """
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for sigma in automorphisms:
        for v in range(n):
            a, b = find(v), find(sigma[v])
            if a != b:
                parent[b] = a
    return [find(v) for v in range(n)]
