"""Independent brute-force oracles used to cross-check the library.

Nothing here may call into the code paths under test: colorings come from a
plain restricted-growth enumeration, isomorphism from permutation search, and
isomorph-free graph lists from orbit minima of labeled edge masks under the
full symmetric group (computed with numpy label propagation).
"""

from __future__ import annotations

from itertools import combinations, permutations, product

import numpy as np

from vcrit.graphs import Graph

# ---------------------------------------------------------------------------
# coloring
# ---------------------------------------------------------------------------


def literal_q_colorable(g: Graph, q: int) -> bool:
    """Check all q**n assignments outright; only usable for tiny graphs."""
    if g.n == 0:
        return True
    edges = g.edges()
    for assignment in product(range(q), repeat=g.n):
        if all(assignment[u] != assignment[v] for u, v in edges):
            return True
    return False


def brute_q_colorable(g: Graph, q: int) -> bool:
    """Exhaustive search over proper assignments in fixed vertex order.

    Colors are introduced in first-use order (restricted growth), which
    enumerates exactly the partitions into at most q independent sets; this is
    the definition of q-colorability, with no heuristics involved.
    """
    n = g.n
    if n == 0:
        return True
    if q <= 0:
        return False
    color = [0] * n
    below = [
        [u for u in range(v) if g.has_edge(u, v)] for v in range(n)
    ]

    def dfs(v: int, used: int) -> bool:
        if v == n:
            return True
        for c in range(1, min(q, used + 1) + 1):
            if any(color[u] == c for u in below[v]):
                continue
            color[v] = c
            if dfs(v + 1, max(used, c)):
                return True
        color[v] = 0
        return False

    return dfs(0, 0)


def brute_chromatic(g: Graph) -> int:
    if g.n == 0:
        return 0
    q = 1
    while not brute_q_colorable(g, q):
        q += 1
    return q


def brute_vertex_critical(g: Graph, k: int) -> bool:
    if brute_chromatic(g) != k:
        return False
    return all(brute_chromatic(g.delete_vertex(v)) < k for v in range(g.n))


# ---------------------------------------------------------------------------
# isomorphism
# ---------------------------------------------------------------------------


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Permutation search with consistency pruning (degrees, partial maps)."""
    n = g.n
    if n != h.n:
        return False
    dg = sorted(g.degree(v) for v in range(n))
    dh = sorted(h.degree(v) for v in range(n))
    if dg != dh:
        return False
    deg_g = [g.degree(v) for v in range(n)]
    deg_h = [h.degree(v) for v in range(n)]
    img = [-1] * n
    used = [False] * n

    def place(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or deg_h[w] != deg_g[v]:
                continue
            if all(g.has_edge(v, u) == h.has_edge(w, img[u]) for u in range(v)):
                img[v] = w
                used[w] = True
                if place(v + 1):
                    return True
                used[w] = False
                img[v] = -1
        return False

    return place(0)


# ---------------------------------------------------------------------------
# induced patterns
# ---------------------------------------------------------------------------


def brute_find_induced(host: Graph, pat_graph: Graph):
    """First embedding over all |pat|-subsets x bijections, or None."""
    k = pat_graph.n
    if k > host.n:
        return None
    for sub in combinations(range(host.n), k):
        for perm in permutations(sub):
            if all(
                pat_graph.has_edge(a, b) == host.has_edge(perm[a], perm[b])
                for a in range(k)
                for b in range(a + 1, k)
            ):
                return perm
    return None


def brute_count_induced_c5(host: Graph) -> int:
    count = 0
    for sub in combinations(range(host.n), 5):
        sm = 0
        for v in sub:
            sm |= 1 << v
        degs = sorted((host.neighbors_mask(v) & sm).bit_count() for v in sub)
        if degs == [2, 2, 2, 2, 2] and _subset_connected(host, sub):
            count += 1
    return count


def _subset_connected(g: Graph, sub) -> bool:
    sm = 0
    for v in sub:
        sm |= 1 << v
    comp = 1 << sub[0]
    frontier = comp
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= g.neighbors_mask(low.bit_length() - 1) & sm
            m ^= low
        frontier = nxt & ~comp
        comp |= frontier
    return comp == sm


def brute_p5_chair_free(g: Graph) -> bool:
    """Induced-P5/chair freeness from first principles.

    On 5 vertices with exactly 4 induced edges, the degree multiset decides:
    {1,1,2,2,2} is a path when connected (the only other realization is
    triangle+edge, which is disconnected), and {1,1,1,2,3} forces the chair
    (every 4-edge realization with that multiset is the chair).
    """
    for sub in combinations(range(g.n), 5):
        sm = 0
        for v in sub:
            sm |= 1 << v
        degs = sorted((g.neighbors_mask(v) & sm).bit_count() for v in sub)
        if sum(degs) != 8:
            continue
        if degs == [1, 1, 1, 2, 3]:
            return False
        if degs == [1, 1, 2, 2, 2] and _subset_connected(g, sub):
            return False
    return True


# ---------------------------------------------------------------------------
# dominated subset pairs
# ---------------------------------------------------------------------------


def brute_dominated_pairs(g: Graph, max_x: int, max_y: int):
    """All (X, Y) subset pairs within bounds meeting the three conditions."""
    found = []
    all_subsets = [
        s for size in range(1, max(max_x, max_y) + 1)
        for s in combinations(range(g.n), size)
    ]
    for xs in all_subsets:
        if len(xs) > max_x:
            continue
        nx = set()
        for v in xs:
            nx.update(g.neighbors(v))
        nx -= set(xs)
        chi_x = brute_chromatic(_induced(g, xs))
        for ys in all_subsets:
            if len(ys) > max_y or set(ys) & (set(xs) | nx):
                continue
            if any(g.has_edge(x, y) for x in xs for y in ys):
                continue
            if not all(g.has_edge(y, w) for y in ys for w in nx):
                continue
            if chi_x <= brute_chromatic(_induced(g, ys)):
                found.append((xs, ys))
    return found


def _induced(g: Graph, s) -> Graph:
    keep = sorted(s)
    idx = {v: i for i, v in enumerate(keep)}
    edges = [
        (idx[u], idx[v])
        for u, v in combinations(keep, 2)
        if g.has_edge(u, v)
    ]
    return Graph(len(keep), edges)


# ---------------------------------------------------------------------------
# isomorph-free graph lists from labeled orbit minima
# ---------------------------------------------------------------------------


def _pairs(n: int):
    return list(combinations(range(n), 2))


def labeled_orbit_minima(n: int) -> np.ndarray:
    """For every labeled graph on n vertices (as an edge bitmask), the least
    mask in its isomorphism orbit.  Orbits come from propagating minima along
    adjacent-transposition generators of the symmetric group, so nothing from
    the package is involved.  Feasible for n <= 7."""
    pairs = _pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    m = len(pairs)
    total = 1 << m
    base = np.arange(total, dtype=np.uint32)
    gens = []
    for k in range(n - 1):
        perm = list(range(n))
        perm[k], perm[k + 1] = perm[k + 1], perm[k]
        arr = np.zeros(total, dtype=np.uint32)
        for b, (a, c) in enumerate(pairs):
            d = index[tuple(sorted((perm[a], perm[c])))]
            arr |= ((base >> b) & np.uint32(1)) << np.uint32(d)
        gens.append(arr)
    labels = base.copy()
    while True:
        before = labels
        for arr in gens:
            labels = np.minimum(labels, labels[arr])
        labels = np.minimum(labels, labels[labels])
        if np.array_equal(labels, before):
            break
    return labels


def graph_to_mask(g: Graph) -> int:
    mask = 0
    for i, (u, v) in enumerate(_pairs(g.n)):
        if g.has_edge(u, v):
            mask |= 1 << i
    return mask


def mask_to_graph(mask: int, n: int) -> Graph:
    pairs = _pairs(n)
    return Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def all_graphs_upto_iso(n: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on n vertices."""
    labels = labeled_orbit_minima(n)
    reps = np.nonzero(labels == np.arange(len(labels), dtype=np.uint32))[0]
    return [mask_to_graph(int(mask), n) for mask in reps]


def orbit_min_of(g: Graph, labels: np.ndarray) -> int:
    return int(labels[graph_to_mask(g)])


# ---------------------------------------------------------------------------
# misc
# ---------------------------------------------------------------------------


def random_gnp(rng, n: int, p: float) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def brute_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return _subset_connected(g, tuple(range(g.n)))


def dedup_by_brute_iso(graphs: list[Graph]) -> list[Graph]:
    """Keep one representative per isomorphism class, via permutation search
    inside cheap-invariant buckets."""
    buckets: dict[tuple, list[Graph]] = {}
    out = []
    for g in graphs:
        key = (g.n, g.edge_count(), tuple(sorted(g.degree(v) for v in range(g.n))))
        kept = buckets.setdefault(key, [])
        if not any(brute_isomorphic(g, h) for h in kept):
            kept.append(g)
            out.append(g)
    return out
