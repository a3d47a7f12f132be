"""Neighborhood decomposition around an induced 5-cycle, plus its claim suite.

Fixing an ordered induced 5-cycle C = (v0..v4), every outside vertex is
classified by its exact neighborhood on C.  The 32 possible C-neighborhoods
are named S0, S1(i), S21(i), S22(i), S31(i), S32(i), S4(i), S5 (indices mod 5,
0-based internally, printed 1-based):

    S0      -> no cycle neighbor          S1(i)  -> {v_i}
    S21(i)  -> {v_i, v_i+1}               S22(i) -> {v_i, v_i+2}
    S31(i)  -> {v_i-1, v_i, v_i+1}        S32(i) -> {v_i-2, v_i, v_i+2}
    S4(i)   -> all of C except v_i        S5     -> all of C

On top of the classification sit two derived unions used by the structure
checks, T(i) and R(i), and a catalog of 21 predicates ("claims") about how
the classes interact.  Tier A claims hold for every connected host free of P5
and the chair; tier B claims additionally need the host to be 5-vertex-critical
and (except B2) to avoid the six known critical graphs.  Each claim evaluates
to holds / fails / skipped, where skipped means a required hypothesis is unmet
and a failing verdict always carries a concrete witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable, Optional

from .coloring import is_k_vertex_critical, is_q_colorable
from .graphs import (
    Graph,
    SetRelation,
    bits,
    components_within,
    induced_subgraph,
    is_connected,
    relation_of,
)
from .patterns import CHAIR, P5, all_induced_c5, classify_family, find_induced

C5Cycle = tuple[int, int, int, int, int]


def validate_c5(g: Graph, cycle) -> C5Cycle:
    """Check that the tuple is an induced 5-cycle of g in cyclic order."""
    c = tuple(cycle)
    if len(c) != 5 or len(set(c)) != 5:
        raise ValueError(f"cycle {c} must list five distinct vertices")
    for v in c:
        if not 0 <= v < g.n:
            raise ValueError(f"cycle vertex {v} outside 0..{g.n - 1}")
    for i in range(5):
        a, b = c[i], c[(i + 1) % 5]
        if not g.has_edge(a, b):
            raise ValueError(f"not a cycle in order: missing edge ({a},{b})")
    for i in range(5):
        a, b = c[i], c[(i + 2) % 5]
        if g.has_edge(a, b):
            raise ValueError(f"not induced: chord ({a},{b})")
    return c  # type: ignore[return-value]


@dataclass(frozen=True, order=True)
class SClass:
    """One of the 32 class labels; index is 0-based or None for S0/S5."""

    kind: str
    index: Optional[int] = None

    def __str__(self) -> str:
        if self.index is None:
            return self.kind
        return f"{self.kind}({self.index + 1})"  # reports are 1-based


def _class_table() -> dict[frozenset[int], SClass]:
    table: dict[frozenset[int], SClass] = {frozenset(): SClass("S0")}
    for i in range(5):
        table[frozenset({i})] = SClass("S1", i)
        table[frozenset({i, (i + 1) % 5})] = SClass("S21", i)
        table[frozenset({i, (i + 2) % 5})] = SClass("S22", i)
        table[frozenset({(i - 1) % 5, i, (i + 1) % 5})] = SClass("S31", i)
        table[frozenset({(i - 2) % 5, i, (i + 2) % 5})] = SClass("S32", i)
        table[frozenset(range(5)) - {i}] = SClass("S4", i)
    table[frozenset(range(5))] = SClass("S5")
    return table


CLASS_BY_SUBSET = _class_table()
SUBSET_BY_CLASS = {c: s for s, c in CLASS_BY_SUBSET.items()}
ALL_CLASSES = sorted(CLASS_BY_SUBSET.values())


@dataclass
class Decomposition:
    """Total classification of the vertices outside one anchored 5-cycle."""

    host: Graph
    cycle: C5Cycle
    label: dict[int, SClass]

    @cached_property
    def members(self) -> dict[SClass, tuple[int, ...]]:
        out: dict[SClass, list[int]] = {c: [] for c in ALL_CLASSES}
        for v in sorted(self.label):
            out[self.label[v]].append(v)
        return {c: tuple(vs) for c, vs in out.items()}

    def s(self, kind: str, index: Optional[int] = None) -> tuple[int, ...]:
        key = SClass(kind, None if index is None else index % 5)
        if key not in self.members:
            raise KeyError(f"no such class {key}")
        return self.members[key]

    def s0(self):
        return self.s("S0")

    def s1(self, i):
        return self.s("S1", i)

    def s21(self, i):
        return self.s("S21", i)

    def s22(self, i):
        return self.s("S22", i)

    def s31(self, i):
        return self.s("S31", i)

    def s32(self, i):
        return self.s("S32", i)

    def s4(self, i):
        return self.s("S4", i)

    def s5(self):
        return self.s("S5")

    def t_set(self, i: int) -> tuple[int, ...]:
        """T(i) = S31(i+/-2) union S32(i+/-1) union S32(i+/-2)."""
        acc = set()
        acc.update(self.s31(i + 2), self.s31(i - 2))
        acc.update(self.s32(i + 1), self.s32(i - 1))
        acc.update(self.s32(i + 2), self.s32(i - 2))
        return tuple(sorted(acc))

    def r_set(self, i: int) -> tuple[int, ...]:
        """R(i) = S31(i+/-1) union S32(i) union S4(i+/-1) union S5."""
        acc = set()
        acc.update(self.s31(i + 1), self.s31(i - 1))
        acc.update(self.s32(i))
        acc.update(self.s4(i + 1), self.s4(i - 1))
        acc.update(self.s5())
        return tuple(sorted(acc))

    def outside_mask(self) -> int:
        m = self.host.full_mask()
        for v in self.cycle:
            m &= ~(1 << v)
        return m


def decompose(g: Graph, cycle) -> Decomposition:
    """Classify every vertex outside the (validated) anchor cycle."""
    c = validate_c5(g, cycle)
    pos = {v: i for i, v in enumerate(c)}
    cm = 0
    for v in c:
        cm |= 1 << v
    label = {}
    for v in range(g.n):
        if cm >> v & 1:
            continue
        hits = frozenset(pos[u] for u in bits(g.neighbors_mask(v) & cm))
        label[v] = CLASS_BY_SUBSET[hits]
    return Decomposition(g, c, label)


# --------------------------------------------------------------------------
# hypothesis gating
# --------------------------------------------------------------------------

TIER_A_HYPOTHESES = ("connected", "p5_free", "chair_free", "has_anchor")
TIER_B_HYPOTHESES = TIER_A_HYPOTHESES + ("five_vertex_critical", "family_free")
# B2 is proved from criticality alone, without excluding the known family.
B2_HYPOTHESES = TIER_A_HYPOTHESES + ("five_vertex_critical",)


class HypothesisCache:
    """Lazily evaluated, per-graph hypothesis flags (cheapest first)."""

    def __init__(self, g: Graph):
        self.g = g

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.g)

    @cached_property
    def p5_free(self) -> bool:
        return find_induced(self.g, P5) is None

    @cached_property
    def chair_free(self) -> bool:
        return find_induced(self.g, CHAIR) is None

    @cached_property
    def five_vertex_critical(self) -> bool:
        return is_k_vertex_critical(self.g, 5).vertex_critical

    @cached_property
    def family_free(self) -> bool:
        return classify_family(self.g) is None

    def flag(self, name: str) -> bool:
        if name == "has_anchor":
            return True  # a valid decomposition is itself the anchor
        return getattr(self, name)


# --------------------------------------------------------------------------
# the claim catalog
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    index: Optional[int]  # failing cycle offset i, when the claim is per-i
    witness: tuple[int, ...]


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    tier: str
    title: str
    hypotheses: dict[str, Optional[bool]] = field(compare=False)
    verdict: str  # "holds" | "fails" | "skipped"
    index: Optional[int] = None
    witness: Optional[tuple[int, ...]] = None


def _pairs_nonadjacent(g: Graph, vs) -> list[tuple[int, int]]:
    return [(u, v) for u, v in combinations(vs, 2) if not g.has_edge(u, v)]


def _complete_between(g: Graph, xs, ys) -> Optional[tuple[int, int]]:
    for x in xs:
        for y in ys:
            if x != y and not g.has_edge(x, y):
                return (x, y)
    return None


def _is_star(g: Graph, vs) -> bool:
    """K1, K2 or K(1,m): one center adjacent to all others, rest independent."""
    if len(vs) == 0:
        return False
    if len(vs) == 1:
        return True
    for c in vs:
        rest = [v for v in vs if v != c]
        if all(g.has_edge(c, v) for v in rest) and not any(
            g.has_edge(u, v) for u, v in combinations(rest, 2)
        ):
            return True
    return False


def _check_a1(d: Decomposition) -> Optional[Violation]:
    for i in range(5):
        for cls in ("S1", "S21", "S22"):
            m = d.s(cls, i)
            if m:
                return Violation(i, (m[0],))
    return None


def _check_b2(d: Decomposition) -> Optional[Violation]:
    m = d.s0()
    return Violation(None, (m[0],)) if m else None


def _check_a3(d: Decomposition) -> Optional[Violation]:
    for i in range(5):
        for u, v in _pairs_nonadjacent(d.host, d.s31(i)):
            return Violation(i, (u, v))
    return None


def _check_a4(d: Decomposition) -> Optional[Violation]:
    g = d.host
    for i in range(5):
        comps = components_within(g, d.s32(i))
        if not comps:
            continue
        for s in d.s4(i) + d.s5():
            for comp in comps:
                if relation_of(g, s, comp) is SetRelation.MIXED:
                    return Violation(i, (s,) + comp)
    return None


def _check_a5(d: Decomposition) -> Optional[Violation]:
    g = d.host
    for i in range(5):
        target = d.s32(i)
        if not target:
            continue
        excluded = set(target) | set(d.s4(i)) | set(d.s5())
        for v in range(g.n):
            if v in excluded:
                continue
            if relation_of(g, v, target) is SetRelation.MIXED:
                return Violation(i, (v,) + target)
    return None


def _check_a6(d: Decomposition) -> Optional[Violation]:
    g = d.host
    for i in range(5):
        for comp in components_within(g, d.s32(i)):
            scope = [v for v in range(g.n) if v not in comp]
            for v in scope:
                if relation_of(g, v, comp) is SetRelation.MIXED:
                    return Violation(i, (v,) + comp)
    return None


def _check_a7(d: Decomposition) -> Optional[Violation]:
    for i in range(5):
        bad = _complete_between(d.host, d.s4(i), d.t_set(i))
        if bad:
            return Violation(i, bad)
    return None


def _check_a8(d: Decomposition) -> Optional[Violation]:
    g = d.host
    for i in range(5):
        nonadj = _pairs_nonadjacent(g, d.s4(i))
        if not nonadj:
            continue
        sources = d.s31(i) + d.s4(i + 2) + d.s4(i - 2)
        for s in sources:
            for u, v in nonadj:
                if g.has_edge(s, u) != g.has_edge(s, v):
                    return Violation(i, (s, u, v))
    return None


def _check_a9(d: Decomposition) -> Optional[Violation]:
    g = d.host
    for i in range(5):
        nonadj = _pairs_nonadjacent(g, d.s4(i))
        if not nonadj:
            continue
        for s in d.r_set(i):
            for u, v in nonadj:
                if not g.has_edge(s, u) and not g.has_edge(s, v):
                    return Violation(i, (s, u, v))
    return None


def _check_a10(d: Decomposition) -> Optional[Violation]:
    g = d.host
    for i in range(5):
        nonadj = _pairs_nonadjacent(g, d.s4(i))
        if not nonadj:
            continue
        for s in d.s4(i + 2) + d.s4(i - 2):
            for u, v in nonadj:
                if not (g.has_edge(s, u) and g.has_edge(s, v)):
                    return Violation(i, (s, u, v))
    return None


def _check_b11(d: Decomposition) -> Optional[Violation]:
    for i in range(5):
        m = d.s31(i)
        if len(m) > 2:
            return Violation(i, m)
    return None


def _check_b12(d: Decomposition) -> Optional[Violation]:
    for i in range(5):
        vs = tuple(sorted(set(d.s32(i)) | set(d.s4(i)) | set(d.s5())))
        if not vs:
            continue
        if is_q_colorable(induced_subgraph(d.host, vs), 2) is None:
            return Violation(i, vs)
    return None


def _check_b13(d: Decomposition) -> Optional[Violation]:
    g = d.host
    for u, v in combinations(d.s5(), 2):
        if g.has_edge(u, v):
            return Violation(None, (u, v))
    return None


def _check_b14(d: Decomposition) -> Optional[Violation]:
    g = d.host
    for i in range(5):
        for vs in (d.s32(i), d.s4(i)):
            for comp in components_within(g, vs):
                if len(comp) > 2:
                    return Violation(i, comp)
    return None


def _check_b15(d: Decomposition) -> Optional[Violation]:
    for i in range(5):
        m = d.s32(i)
        if len(m) > 3:
            return Violation(i, m)
    return None


def _s4_complete_to_opposites(d: Decomposition, i: int) -> bool:
    other = d.s4(i + 2) + d.s4(i - 2)
    return _complete_between(d.host, d.s4(i), other) is None


def _check_b16(d: Decomposition) -> Optional[Violation]:
    for i in range(5):
        m = d.s4(i)
        if not m:
            continue
        if _is_star(d.host, m) or _s4_complete_to_opposites(d, i):
            continue
        return Violation(i, m)
    return None


def _check_b17(d: Decomposition) -> Optional[Violation]:
    for i in range(5):
        m = d.s4(i)
        if m and _is_star(d.host, m) and len(m) > 2:
            return Violation(i, m)
    return None


def _check_b18(d: Decomposition) -> Optional[Violation]:
    for i in range(5):
        m = d.s4(i)
        if _s4_complete_to_opposites(d, i) and d.r_set(i) and len(m) > 6:
            return Violation(i, m)
    return None


def _check_b19(d: Decomposition) -> Optional[Violation]:
    for i in range(5):
        m = d.s4(i)
        if _s4_complete_to_opposites(d, i) and not d.r_set(i) and len(m) > 2:
            return Violation(i, m)
    return None


def _check_b20(d: Decomposition) -> Optional[Violation]:
    for i in range(5):
        m = d.s4(i)
        if len(m) > 6:
            return Violation(i, m)
    return None


def _check_b21(d: Decomposition) -> Optional[Violation]:
    # the literal size bound 2**55 can never fail at this scale; the testable
    # content is that no two cycle-complete vertices share their neighborhood
    # inside the union of all S31/S32/S4 classes
    g = d.host
    um = 0
    for i in range(5):
        for v in d.s31(i) + d.s32(i) + d.s4(i):
            um |= 1 << v
    for u, v in combinations(d.s5(), 2):
        if g.neighbors_mask(u) & um == g.neighbors_mask(v) & um:
            return Violation(None, (u, v))
    return None


@dataclass(frozen=True)
class ClaimSpec:
    claim_id: str
    tier: str
    title: str
    hypotheses: tuple[str, ...]
    check: Callable[[Decomposition], Optional[Violation]]


_CATALOG = (
    ClaimSpec("A1", "A", "classes with one or two cycle neighbors are empty",
              TIER_A_HYPOTHESES, _check_a1),
    ClaimSpec("B2", "B", "no vertex avoids the cycle entirely",
              B2_HYPOTHESES, _check_b2),
    ClaimSpec("A3", "A", "each S31(i) induces a clique",
              TIER_A_HYPOTHESES, _check_a3),
    ClaimSpec("A4", "A", "S4(i) and S5 vertices never split a component of S32(i)",
              TIER_A_HYPOTHESES, _check_a4),
    ClaimSpec("A5", "A", "vertices outside S32(i)+S4(i)+S5 never mix on S32(i)",
              TIER_A_HYPOTHESES, _check_a5),
    ClaimSpec("A6", "A", "every component of S32(i) is a homogeneous set",
              TIER_A_HYPOTHESES, _check_a6),
    ClaimSpec("A7", "A", "S4(i) is complete to T(i)",
              TIER_A_HYPOTHESES, _check_a7),
    ClaimSpec("A8", "A", "S31(i) and S4(i+/-2) never mix on a nonadjacent pair in S4(i)",
              TIER_A_HYPOTHESES, _check_a8),
    ClaimSpec("A9", "A", "R(i) vertices hit every nonadjacent pair in S4(i)",
              TIER_A_HYPOTHESES, _check_a9),
    ClaimSpec("A10", "A", "S4(i+/-2) vertices are complete to nonadjacent pairs in S4(i)",
              TIER_A_HYPOTHESES, _check_a10),
    ClaimSpec("B11", "B", "|S31(i)| <= 2", TIER_B_HYPOTHESES, _check_b11),
    ClaimSpec("B12", "B", "S32(i)+S4(i)+S5 induces a bipartite subgraph",
              TIER_B_HYPOTHESES, _check_b12),
    ClaimSpec("B13", "B", "S5 is an independent set", TIER_B_HYPOTHESES, _check_b13),
    ClaimSpec("B14", "B", "components of S32(i) and S4(i) are K1 or K2",
              TIER_B_HYPOTHESES, _check_b14),
    ClaimSpec("B15", "B", "|S32(i)| <= 3", TIER_B_HYPOTHESES, _check_b15),
    ClaimSpec("B16", "B", "S4(i) is a star or complete to S4(i+/-2)",
              TIER_B_HYPOTHESES, _check_b16),
    ClaimSpec("B17", "B", "a star S4(i) has at most 2 vertices",
              TIER_B_HYPOTHESES, _check_b17),
    ClaimSpec("B18", "B", "complete-to-opposites S4(i) with R(i) nonempty has <= 6 vertices",
              TIER_B_HYPOTHESES, _check_b18),
    ClaimSpec("B19", "B", "complete-to-opposites S4(i) with R(i) empty has <= 2 vertices",
              TIER_B_HYPOTHESES, _check_b19),
    ClaimSpec("B20", "B", "|S4(i)| <= 6", TIER_B_HYPOTHESES, _check_b20),
    ClaimSpec("B21", "B", "S5 neighborhoods in the S31/S32/S4 union are pairwise distinct",
              TIER_B_HYPOTHESES, _check_b21),
)

CLAIMS = {spec.claim_id: spec for spec in _CATALOG}
CLAIM_IDS = tuple(spec.claim_id for spec in _CATALOG)


def check_claim(
    d: Decomposition,
    claim_id: str,
    bypass_hypotheses: bool = False,
    cache: Optional[HypothesisCache] = None,
) -> ClaimReport:
    """Evaluate one claim on a decomposition.

    Hypotheses are evaluated lazily in catalog order; the first unmet one
    yields a skipped verdict unless bypass_hypotheses is set, in which case
    the predicate runs regardless (its verdict then carries no guarantee for
    out-of-class graphs).
    """
    try:
        spec = CLAIMS[claim_id]
    except KeyError:
        raise ValueError(f"unknown claim id {claim_id!r}") from None
    if cache is None:
        cache = HypothesisCache(d.host)
    flags: dict[str, Optional[bool]] = {h: None for h in spec.hypotheses}
    unmet = False
    for h in spec.hypotheses:
        ok = cache.flag(h)
        flags[h] = ok
        if not ok:
            unmet = True
            if not bypass_hypotheses:
                break
    if unmet and not bypass_hypotheses:
        return ClaimReport(spec.claim_id, spec.tier, spec.title, flags, "skipped")
    violation = spec.check(d)
    if violation is None:
        return ClaimReport(spec.claim_id, spec.tier, spec.title, flags, "holds")
    return ClaimReport(
        spec.claim_id, spec.tier, spec.title, flags, "fails",
        index=violation.index, witness=violation.witness,
    )


@dataclass(frozen=True)
class AnchorReport:
    cycle: C5Cycle
    reports: tuple[ClaimReport, ...]


def verify_all(g: Graph, bypass_hypotheses: bool = False) -> list[AnchorReport]:
    """Decompose on every induced 5-cycle anchor and run the whole catalog.

    Graphs without an induced 5-cycle yield an empty list.
    """
    cache = HypothesisCache(g)
    out = []
    for cycle in all_induced_c5(g):
        d = decompose(g, cycle)
        reports = tuple(
            check_claim(d, cid, bypass_hypotheses, cache) for cid in CLAIM_IDS
        )
        out.append(AnchorReport(cycle, reports))
    return out


def all_hold(results: list[AnchorReport]) -> bool:
    """Aggregate verdict: no non-skipped claim fails on any anchor."""
    return all(
        r.verdict != "fails" for anchor in results for r in anchor.reports
    )
