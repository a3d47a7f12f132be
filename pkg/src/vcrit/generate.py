"""Isomorph-free exhaustive generation of hereditary classes, plus the
vertex-critical search built on top of it.

Generation proceeds level by level: every accepted graph of order n is
extended by one new vertex in all 2^n ways, a child survives only if it stays
free of the forbidden patterns (checked only through the new vertex, since the
parent is already free), and a canonical-deletion test keeps exactly one
production per isomorphism class: the child is accepted when its new vertex
lies in the same automorphism orbit as the vertex holding the last canonical
position.  Duplicates can then only arise among children of a single parent
and are removed by canonical form, so no global isomorph store is needed.

Optional worker processes split a level's parents; results are merged back in
parent order, so output is byte-identical for any worker count.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence

from .canon import canonical_form, canonicalize, orbit_partition, rooted_encoding
from .certificates import find_comparable_pair
from .coloring import CriticalityReport, is_k_vertex_critical, is_q_colorable
from .graphs import Graph, is_connected
from .patterns import CHAIR, P5, Pattern, contains_induced_using, find_induced

MAX_N = 11


@dataclass(frozen=True)
class GenerationSpec:
    """Parameters of one enumeration run."""

    n_max: int
    forbidden: tuple[Pattern, ...] = (P5, CHAIR)
    connected_only: bool = False
    k: int = 5

    def __post_init__(self):
        if not 1 <= self.n_max <= MAX_N:
            raise ValueError(f"n_max must lie in 1..{MAX_N}")
        for pat in self.forbidden:
            if pat.graph.n > 9:
                raise ValueError(f"forbidden pattern {pat.name} exceeds 9 vertices")
        if self.k < 1:
            raise ValueError("criticality target must be at least 1")


def _accept_child(child: Graph) -> Optional[int]:
    """Canonical-deletion acceptance; returns the canonical encoding when the
    new (= highest-labeled) vertex is in the orbit of the canonical-deletion
    vertex, else None."""
    new = child.n - 1
    res = canonicalize(child)
    vstar = res.labeling[-1]
    if vstar == new:
        return res.encoding
    if child.degree(vstar) != child.degree(new):
        return None
    if res.automorphisms:
        roots = orbit_partition(child.n, res.automorphisms)
        if roots[vstar] == roots[new]:
            return res.encoding
    if rooted_encoding(child, new) == rooted_encoding(child, vstar):
        return res.encoding
    return None


def child_extensions(
    parent: Graph, forbidden: Sequence[Pattern] = ()
) -> list[tuple[Graph, int]]:
    """One generation step: the accepted one-vertex extensions of an accepted
    parent, each with its canonical encoding, sorted by encoding.

    With forbidden patterns the check runs only through the new vertex, which
    is sound because the class is hereditary and the parent is already free.
    """
    new = parent.n
    seen: dict[int, Graph] = {}
    for mask in range(1 << parent.n):
        child = parent.with_vertex(mask)
        if any(contains_induced_using(child, pat, new) for pat in forbidden):
            continue
        enc = _accept_child(child)
        if enc is None or enc in seen:
            continue
        seen[enc] = child
    return sorted(((g, enc) for enc, g in seen.items()), key=lambda t: t[1])


def _expand_task(args) -> list[tuple[tuple[int, ...], int]]:
    parent_masks, forbidden_data = args
    parent = Graph._unsafe(len(parent_masks), parent_masks)
    forbidden = tuple(
        Pattern(name, Graph._unsafe(len(masks), masks)) for name, masks in forbidden_data
    )
    return [(g._adj, enc) for g, enc in child_extensions(parent, forbidden)]


def _expand_level(
    parents: list[Graph], forbidden: Sequence[Pattern], workers: int
) -> list[tuple[Graph, int]]:
    if workers <= 1 or len(parents) < 4:
        out = []
        for parent in parents:
            out.extend(child_extensions(parent, forbidden))
        return out
    forbidden_data = tuple((pat.name, pat.graph._adj) for pat in forbidden)
    tasks = [(parent._adj, forbidden_data) for parent in parents]
    chunk = max(1, len(tasks) // (workers * 8))
    out = []
    with multiprocessing.Pool(workers) as pool:
        for rows in pool.imap(_expand_task, tasks, chunksize=chunk):
            out.extend(
                (Graph._unsafe(len(masks), masks), enc) for masks, enc in rows
            )
    return out


def _generate_rows(spec: GenerationSpec, workers: int = 1) -> Iterator[tuple[Graph, int]]:
    root = Graph(1)
    if any(find_induced(root, pat) is not None for pat in spec.forbidden):
        return
    level: list[tuple[Graph, int]] = [(root, canonicalize(root).encoding)]
    n = 1
    while level:
        for g, enc in level:
            if not spec.connected_only or is_connected(g):
                yield g, enc
        if n == spec.n_max:
            return
        level = _expand_level([g for g, _ in level], spec.forbidden, workers)
        n += 1


def generate_class(spec: GenerationSpec, workers: int = 1) -> Iterator[Graph]:
    """Exactly one representative per isomorphism class of forbidden-free
    graphs with 1 <= n <= n_max, in a deterministic order (by order, then by
    parent, then by canonical encoding)."""
    for g, _enc in _generate_rows(spec, workers):
        yield g


class SearchRow(NamedTuple):
    graph: Graph
    report: CriticalityReport
    canonical: bytes


@dataclass(frozen=True)
class SearchResult:
    members: tuple[SearchRow, ...]

    def graphs(self) -> tuple[Graph, ...]:
        return tuple(row.graph for row in self.members)


def _is_k_critical_fast(g: Graph, k: int) -> bool:
    # cheap necessary condition first: critical graphs have no comparable pair
    if find_comparable_pair(g) is not None:
        return False
    if is_q_colorable(g, k - 1) is not None:
        return False
    if is_q_colorable(g, k) is None:
        return False
    return all(
        is_q_colorable(g.delete_vertex(v), k - 1) is not None for v in range(g.n)
    )


def search_critical(spec: GenerationSpec, workers: int = 1) -> SearchResult:
    """Generate the class and keep its k-vertex-critical members, deduplicated
    up to isomorphism and sorted by (order, canonical form)."""
    rows = []
    for g in generate_class(spec, workers):
        if not _is_k_critical_fast(g, spec.k):
            continue
        report = is_k_vertex_critical(g, spec.k)
        rows.append(SearchRow(g, report, canonical_form(g)))
    rows.sort(key=lambda r: (r.graph.n, r.canonical))
    return SearchResult(tuple(rows))
