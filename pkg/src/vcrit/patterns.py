"""Induced-subgraph search and the built-in pattern library.

Containment always means *induced*: an embedding maps pattern vertices
injectively so that edges map to edges and non-edges to non-edges.  The
library bundles the small paths/cycles/cliques, the chair (P4 plus a vertex
pendant on a middle vertex), 2P2, P1+K3, and the six known 5-vertex-critical
graphs of the target class (K5, W, P, Q1, Q2, Q3), whose adjacency data is
compiled in rather than loaded from files.
"""

from __future__ import annotations

from itertools import combinations
from typing import NamedTuple, Optional

from .graphs import Graph, bits, complete_graph, cycle_graph, path_graph


class Pattern(NamedTuple):
    name: str
    graph: Graph


def _from_neighbor_dict(d: dict[int, tuple[int, ...]]) -> Graph:
    masks = [0] * len(d)
    for v, nbrs in d.items():
        for u in nbrs:
            masks[v] |= 1 << u
    return Graph.from_masks(tuple(masks))


def _chair() -> Graph:
    # P4 on 0-1-2-3 plus vertex 4 adjacent to the middle vertex 2;
    # degree sequence 1,1,1,2,3
    return Graph(5, [(0, 1), (1, 2), (2, 3), (2, 4)])


# Adjacency data for the five non-complete members of the known critical
# family.  Vertices 0..4 always carry the defining induced 5-cycle.
_W = {
    0: (1, 4, 5, 6), 1: (0, 2, 5, 6), 2: (1, 3, 5, 6), 3: (2, 4, 5, 6),
    4: (0, 3, 5, 6), 5: (0, 1, 2, 3, 4, 6), 6: (0, 1, 2, 3, 4, 5),
}
_P = {
    0: (1, 4, 5, 6), 1: (0, 2, 7, 8), 2: (1, 3, 5, 6, 7, 8),
    3: (2, 4, 5, 6, 7, 8), 4: (0, 3, 7, 8), 5: (0, 2, 3, 7),
    6: (0, 2, 3, 8), 7: (1, 2, 3, 4, 5, 8), 8: (1, 2, 3, 4, 6, 7),
}
_Q1 = {
    0: (1, 4, 5, 6), 1: (0, 2, 5, 6, 7, 8), 2: (1, 3, 5, 6, 7, 8),
    3: (2, 4, 7, 8), 4: (0, 3, 7, 8), 5: (0, 1, 2, 6, 7),
    6: (0, 1, 2, 5, 8), 7: (1, 2, 3, 4, 5, 8), 8: (1, 2, 3, 4, 6, 7),
}
_Q2 = {
    0: (1, 4, 5, 6), 1: (0, 2, 5, 6, 7, 8), 2: (1, 3, 5, 6, 7, 8),
    3: (2, 4, 5, 6, 7, 8), 4: (0, 3, 7, 8), 5: (0, 1, 2, 3, 6, 7),
    6: (0, 1, 2, 3, 5, 8), 7: (1, 2, 3, 4, 5), 8: (1, 2, 3, 4, 6),
}
_Q3 = {
    0: (1, 4, 5, 6), 1: (0, 2, 5, 7, 8), 2: (1, 3, 5, 7, 8),
    3: (2, 4, 6, 7, 8), 4: (0, 3, 6, 7, 8), 5: (0, 1, 2, 6),
    6: (0, 3, 4, 5, 8), 7: (1, 2, 3, 4, 8), 8: (1, 2, 3, 4, 6, 7),
}

P2 = Pattern("P2", path_graph(2))
P3 = Pattern("P3", path_graph(3))
P4 = Pattern("P4", path_graph(4))
P5 = Pattern("P5", path_graph(5))
C4 = Pattern("C4", cycle_graph(4))
C5 = Pattern("C5", cycle_graph(5))
K3 = Pattern("K3", complete_graph(3))
K4 = Pattern("K4", complete_graph(4))
K5 = Pattern("K5", complete_graph(5))
CHAIR = Pattern("chair", _chair())
TWO_P2 = Pattern("2P2", Graph(4, [(0, 1), (2, 3)]))
P1_PLUS_K3 = Pattern("P1+K3", Graph(4, [(1, 2), (1, 3), (2, 3)]))
W = Pattern("W", _from_neighbor_dict(_W))
P = Pattern("P", _from_neighbor_dict(_P))
Q1 = Pattern("Q1", _from_neighbor_dict(_Q1))
Q2 = Pattern("Q2", _from_neighbor_dict(_Q2))
Q3 = Pattern("Q3", _from_neighbor_dict(_Q3))

#: The six known 5-vertex-critical members of the class, in classification order.
CRITICAL_FAMILY = (K5, W, P, Q1, Q2, Q3)

_BUILTINS = (
    P2, P3, P4, P5, C4, C5, K3, K4, K5, CHAIR, TWO_P2, P1_PLUS_K3,
    W, P, Q1, Q2, Q3,
)
BUILTIN_PATTERNS = {pat.name.lower(): pat for pat in _BUILTINS}


def pattern_by_name(name: str) -> Pattern:
    key = name.strip().lower()
    if key == "p1k3":
        key = "p1+k3"
    try:
        return BUILTIN_PATTERNS[key]
    except KeyError:
        raise ValueError(
            f"unknown pattern {name!r}; known: {', '.join(sorted(BUILTIN_PATTERNS))}"
        ) from None


def _search_order(p: Graph) -> list[int]:
    """Pattern vertex order: highest degree first, then preferring vertices
    attached to already-ordered ones so partial embeddings prune early."""
    remaining = set(range(p.n))
    order: list[int] = []
    while remaining:
        anchored = [v for v in remaining if any(p.has_edge(v, u) for u in order)]
        pool = anchored if anchored else sorted(remaining)
        v = max(pool, key=lambda x: (p.degree(x), -x))
        order.append(v)
        remaining.remove(v)
    return order


def embedding_is_induced(host: Graph, pat: Pattern, emb: tuple[int, ...]) -> bool:
    """Straight-line re-check of the induced-embedding conditions."""
    p = pat.graph
    if len(emb) != p.n or len(set(emb)) != p.n:
        return False
    if any(not 0 <= h < host.n for h in emb):
        return False
    for a in range(p.n):
        for b in range(a + 1, p.n):
            if p.has_edge(a, b) != host.has_edge(emb[a], emb[b]):
                return False
    return True


def _embed(host: Graph, p: Graph, order: list[int], pinned: dict[int, int]) -> Optional[list[int]]:
    """Backtracking embedder; pinned maps pattern vertices to fixed images.

    Host candidates are tried in ascending order, so the first completion is
    deterministic for a given order.
    """
    n = p.n
    emb = [-1] * n
    used = 0
    host_full = host.full_mask()
    pdeg = [p.degree(v) for v in range(n)]
    hdeg = [host.degree(v) for v in range(host.n)]

    for pv, hv in pinned.items():
        if hdeg[hv] < pdeg[pv] or used >> hv & 1:
            return None
        emb[pv] = hv
        used |= 1 << hv

    placed: list[int] = [pv for pv in order if emb[pv] >= 0]

    def candidates(pv: int) -> int:
        cand = host_full & ~used
        for u in placed:
            hu = emb[u]
            if p.has_edge(pv, u):
                cand &= host.neighbors_mask(hu)
            else:
                cand &= ~host.neighbors_mask(hu)
        return cand

    def place(k: int) -> bool:
        if k == len(order):
            return True
        pv = order[k]
        if emb[pv] >= 0:
            return place(k + 1)
        nonlocal used
        for hv in bits(candidates(pv)):
            if hdeg[hv] < pdeg[pv]:
                continue
            emb[pv] = hv
            used |= 1 << hv
            placed.append(pv)
            if place(k + 1):
                return True
            placed.pop()
            used ^= 1 << hv
            emb[pv] = -1
        return False

    # pinned images must also be mutually consistent
    for a in pinned:
        for b in pinned:
            if a < b and p.has_edge(a, b) != host.has_edge(emb[a], emb[b]):
                return None
    return emb if place(0) else None


def find_induced(host: Graph, pat: Pattern) -> Optional[tuple[int, ...]]:
    """Some induced embedding of the pattern into the host, or None.

    The result is deterministic (fixed search order, ascending candidates) and
    re-verified against the edge/non-edge conditions before being returned.
    """
    p = pat.graph
    if p.n < 1:
        raise ValueError("patterns must have at least one vertex")
    if p.n > host.n:
        return None
    emb = _embed(host, p, _search_order(p), {})
    if emb is None:
        return None
    result = tuple(emb)
    if not embedding_is_induced(host, pat, result):
        raise RuntimeError(f"internal error: invalid embedding for {pat.name}")
    return result


def contains_induced_using(host: Graph, pat: Pattern, vertex: int) -> bool:
    """Whether some induced copy of the pattern passes through the vertex."""
    p = pat.graph
    if p.n > host.n:
        return False
    order = _search_order(p)
    for pv in range(p.n):
        if _embed(host, p, order, {pv: vertex}) is not None:
            return True
    return False


class FreenessReport(NamedTuple):
    free: bool
    pattern: Optional[str]
    embedding: Optional[tuple[int, ...]]


def is_free(host: Graph, pats) -> FreenessReport:
    """Whether the host avoids every listed pattern as an induced subgraph;
    on failure, names the first violated pattern with a witness embedding."""
    for pat in pats:
        emb = find_induced(host, pat)
        if emb is not None:
            return FreenessReport(False, pat.name, emb)
    return FreenessReport(True, None, None)


def all_induced_c5(host: Graph) -> list[tuple[int, int, int, int, int]]:
    """Every induced 5-cycle, one canonical tuple per dihedral class.

    The representative starts at the least vertex and walks toward its smaller
    cycle neighbor, which is the lexicographically least of the 10 symmetric
    orderings.  Output is sorted.
    """
    out = []
    for sub in combinations(range(host.n), 5):
        sm = 0
        for v in sub:
            sm |= 1 << v
        ok = True
        for v in sub:
            if (host.neighbors_mask(v) & sm).bit_count() != 2:
                ok = False
                break
        if not ok:
            continue
        # 2-regular on 5 vertices is a single 5-cycle
        start = sub[0]
        first = min(bits(host.neighbors_mask(start) & sm))
        cyc = [start, first]
        prev, cur = start, first
        while len(cyc) < 5:
            nxt = next(
                u for u in bits(host.neighbors_mask(cur) & sm) if u != prev
            )
            cyc.append(nxt)
            prev, cur = cur, nxt
        out.append(tuple(cyc))
    out.sort()
    return out


def classify_family(g: Graph) -> Optional[str]:
    """Name of the first known critical-family member contained induced in g."""
    for pat in CRITICAL_FAMILY:
        if find_induced(g, pat) is not None:
            return pat.name
    return None
