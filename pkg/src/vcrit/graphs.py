"""Immutable simple graphs on at most 64 vertices, backed by bitmask adjacency.

Vertices are the integers 0..n-1.  Each vertex stores its neighborhood as a
single int bitmask, so set-style queries (complete / anticomplete / mixed,
open neighborhoods, components) are a handful of word operations.  Graphs are
values: equal vertex count and equal adjacency compare equal, and every
operation returns a new graph.
"""

from __future__ import annotations

import enum
from itertools import combinations
from typing import Iterable, Iterator, Optional

MAX_VERTICES = 64


def _mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A finite simple undirected graph with value semantics."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside supported range 0..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)

    @classmethod
    def from_masks(cls, masks: tuple[int, ...]) -> "Graph":
        """Build from per-vertex neighbor masks, validating symmetry and loops."""
        n = len(masks)
        if n > MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside supported range 0..{MAX_VERTICES}")
        full = (1 << n) - 1 if n else 0
        for v, m in enumerate(masks):
            if m & ~full:
                raise ValueError(f"neighbor mask of {v} mentions vertices >= {n}")
            if m >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for u in range(n):
            for v in _bits(masks[u]):
                if not masks[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        return cls._unsafe(n, tuple(masks))

    @classmethod
    def _unsafe(cls, n: int, masks: tuple[int, ...]) -> "Graph":
        # internal fast path: caller guarantees a valid symmetric loop-free tuple
        g = cls.__new__(cls)
        g.n = n
        g._adj = masks
        return g

    # -- basic queries ------------------------------------------------------

    def neighbors_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self._adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def full_mask(self) -> int:
        return (1 << self.n) - 1 if self.n else 0

    # -- derived graphs ------------------------------------------------------

    def with_vertex(self, neighbor_mask: int) -> "Graph":
        """Append vertex n adjacent to exactly the vertices set in the mask."""
        if neighbor_mask & ~self.full_mask():
            raise ValueError("attachment mask mentions vertices outside the graph")
        if self.n + 1 > MAX_VERTICES:
            raise ValueError("vertex cap exceeded")
        new = 1 << self.n
        masks = tuple(
            m | new if neighbor_mask >> v & 1 else m for v, m in enumerate(self._adj)
        ) + (neighbor_mask,)
        return Graph._unsafe(self.n + 1, masks)

    def delete_vertex(self, v: int) -> "Graph":
        return induced_subgraph(self, [u for u in range(self.n) if u != v])

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge")
        masks = list(self._adj)
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        return Graph._unsafe(self.n, tuple(masks))

    def permuted(self, perm: Iterable[int]) -> "Graph":
        """Relabel: vertex v becomes perm[v]."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        masks = [0] * self.n
        for v in range(self.n):
            m = 0
            for u in _bits(self._adj[v]):
                m |= 1 << perm[u]
            masks[perm[v]] = m
        return Graph._unsafe(self.n, tuple(masks))

    # -- value semantics ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()!r})"


# -- small constructors -------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, list(combinations(range(n), 2)))


# -- set-relation predicates ----------------------------------------------------


class SetRelation(enum.Enum):
    COMPLETE = "complete"
    ANTICOMPLETE = "anticomplete"
    MIXED = "mixed"


def _vertex_set_mask(g: Graph, s: Iterable[int]) -> int:
    m = 0
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
        m |= 1 << v
    return m


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph on the vertices of s, relabeled 0..|s|-1 in ascending order."""
    keep = sorted(set(_bits(_vertex_set_mask(g, s))))
    index = {v: i for i, v in enumerate(keep)}
    masks = [0] * len(keep)
    for v in keep:
        m = 0
        for u in _bits(g.neighbors_mask(v)):
            if u in index:
                m |= 1 << index[u]
        masks[index[v]] = m
    return Graph._unsafe(len(keep), tuple(masks))


def open_set_neighborhood(g: Graph, x: Iterable[int]) -> frozenset[int]:
    """Vertices outside x adjacent to at least one member of x."""
    xm = _vertex_set_mask(g, x)
    nm = 0
    for v in _bits(xm):
        nm |= g.neighbors_mask(v)
    return frozenset(_bits(nm & ~xm))


def relation_of(g: Graph, x: int, y: Iterable[int]) -> SetRelation:
    """Complete, anticomplete or mixed position of vertex x against set y.

    y must be nonempty and must not contain x; exactly one relation applies.
    A vertex "distinguishes" an edge uv when it is MIXED on {u, v}.
    """
    ym = _vertex_set_mask(g, y)
    if ym == 0:
        raise ValueError("relation against the empty set is undefined")
    if ym >> x & 1:
        raise ValueError(f"vertex {x} is a member of the set")
    hits = g.neighbors_mask(x) & ym
    if hits == ym:
        return SetRelation.COMPLETE
    if hits == 0:
        return SetRelation.ANTICOMPLETE
    return SetRelation.MIXED


def is_homogeneous(
    g: Graph, h: Iterable[int], scope: Iterable[int]
) -> tuple[bool, Optional[int]]:
    """Whether no vertex of scope is mixed on h; returns a mixed witness if any.

    h must be nonempty and disjoint from scope.
    """
    hm = _vertex_set_mask(g, h)
    sm = _vertex_set_mask(g, scope)
    if hm == 0:
        raise ValueError("homogeneity of the empty set is undefined")
    if hm & sm:
        raise ValueError("scope overlaps the candidate homogeneous set")
    for v in _bits(sm):
        hits = g.neighbors_mask(v) & hm
        if hits != 0 and hits != hm:
            return False, v
    return True, None


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Maximal connected vertex sets, ascending inside, ordered by minimum."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.neighbors_mask(u)
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(tuple(_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    comps = connected_components(g)
    return len(comps) == 1


def components_within(g: Graph, s: Iterable[int]) -> list[tuple[int, ...]]:
    """Connected components of the subgraph induced by s, in host labels."""
    sm = _vertex_set_mask(g, s)
    seen = 0
    out = []
    for v in _bits(sm):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.neighbors_mask(u) & sm
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(tuple(_bits(comp)))
    return out


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions in ascending order."""
    return _bits(mask)
