"""Graph value type and the set-relation predicates."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vcrit.graphs import (
    Graph,
    SetRelation,
    complete_graph,
    connected_components,
    cycle_graph,
    induced_subgraph,
    is_connected,
    is_homogeneous,
    open_set_neighborhood,
    path_graph,
    relation_of,
)


def graphs(max_n=8):
    return st.integers(2, max_n).flatmap(
        lambda n: st.builds(
            lambda edges: Graph(n, edges),
            st.lists(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                    lambda e: e[0] != e[1]
                ),
                max_size=n * n,
            ),
        )
    )


class TestGraph:
    def test_no_self_loops(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph(3, [(0, 0)])

    def test_edge_range(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_vertex_cap(self):
        Graph(64)
        with pytest.raises(ValueError):
            Graph(65)

    def test_from_masks_rejects_asymmetry(self):
        with pytest.raises(ValueError, match="asymmetric"):
            Graph.from_masks((0b010, 0b000, 0b000))

    def test_value_semantics(self):
        a = Graph(3, [(0, 1), (1, 2)])
        b = Graph(3, [(1, 2), (0, 1)])
        assert a == b and hash(a) == hash(b)
        assert a != Graph(3, [(0, 1)])
        assert a != Graph(4, [(0, 1), (1, 2)])

    def test_symmetry_of_adjacency(self):
        g = Graph(4, [(0, 2), (1, 3)])
        for u in range(4):
            for v in range(4):
                assert g.has_edge(u, v) == g.has_edge(v, u)

    def test_with_vertex_and_delete(self):
        g = path_graph(3).with_vertex(0b101)
        assert g.has_edge(3, 0) and g.has_edge(3, 2) and not g.has_edge(3, 1)
        assert g.delete_vertex(3) == path_graph(3)

    def test_permuted_roundtrip(self):
        g = cycle_graph(5)
        perm = [3, 1, 4, 0, 2]
        inv = [perm.index(i) for i in range(5)]
        assert g.permuted(perm).permuted(inv) == g


class TestInducedSubgraph:
    def test_k5_triangle(self):
        assert induced_subgraph(complete_graph(5), [0, 1, 2]) == complete_graph(3)

    def test_c5_path(self):
        assert induced_subgraph(cycle_graph(5), [0, 1, 2]) == path_graph(3)

    def test_relabeling_follows_ascending_order(self):
        g = Graph(5, [(1, 4)])
        h = induced_subgraph(g, [4, 1])
        assert h == Graph(2, [(0, 1)])

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            induced_subgraph(path_graph(3), [0, 3])


class TestOpenSetNeighborhood:
    def test_single_endpoint(self):
        assert open_set_neighborhood(path_graph(3), [0]) == {1}

    def test_union_minus_set(self):
        assert open_set_neighborhood(path_graph(3), [0, 2]) == {1}

    @given(graphs())
    @settings(max_examples=60, deadline=None)
    def test_singleton_is_neighborhood(self, g):
        for v in range(g.n):
            assert open_set_neighborhood(g, [v]) == set(g.neighbors(v))

    @given(graphs())
    @settings(max_examples=60, deadline=None)
    def test_full_set_is_empty(self, g):
        assert open_set_neighborhood(g, range(g.n)) == frozenset()


class TestRelationOf:
    def test_examples(self):
        k5, c5 = complete_graph(5), cycle_graph(5)
        assert relation_of(k5, 0, [1, 2]) is SetRelation.COMPLETE
        assert relation_of(c5, 0, [2, 3]) is SetRelation.ANTICOMPLETE
        assert relation_of(c5, 0, [1, 2]) is SetRelation.MIXED

    def test_contract_violations(self):
        g = path_graph(3)
        with pytest.raises(ValueError):
            relation_of(g, 0, [])
        with pytest.raises(ValueError):
            relation_of(g, 0, [0, 1])

    @given(graphs(), st.data())
    @settings(max_examples=80, deadline=None)
    def test_trichotomy(self, g, data):
        x = data.draw(st.integers(0, g.n - 1))
        pool = [v for v in range(g.n) if v != x]
        y = data.draw(st.sets(st.sampled_from(pool), min_size=1))
        rel = relation_of(g, x, y)
        hits = sum(1 for v in y if g.has_edge(x, v))
        if hits == len(y):
            assert rel is SetRelation.COMPLETE
        elif hits == 0:
            assert rel is SetRelation.ANTICOMPLETE
        else:
            assert rel is SetRelation.MIXED


class TestHomogeneous:
    def test_singletons_always_homogeneous(self):
        g = cycle_graph(5)
        for v in range(5):
            ok, witness = is_homogeneous(g, [v], [u for u in range(5) if u != v])
            assert ok and witness is None

    def test_path_witness(self):
        ok, witness = is_homogeneous(path_graph(3), [0, 1], [2])
        assert not ok and witness == 2

    def test_errors(self):
        g = path_graph(3)
        with pytest.raises(ValueError):
            is_homogeneous(g, [], [0])
        with pytest.raises(ValueError):
            is_homogeneous(g, [0, 1], [1, 2])

    @given(graphs(), st.data())
    @settings(max_examples=60, deadline=None)
    def test_matches_relation_characterization(self, g, data):
        h = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
        scope = [v for v in range(g.n) if v not in h]
        ok, witness = is_homogeneous(g, h, scope)
        mixed = [v for v in scope if relation_of(g, v, h) is SetRelation.MIXED]
        assert ok == (not mixed)
        if not ok:
            assert witness in mixed


class TestComponents:
    def test_complete_graph_one_component(self):
        assert connected_components(complete_graph(5)) == [(0, 1, 2, 3, 4)]

    def test_two_components_ordered_by_minimum(self):
        g = Graph(4, [(1, 3), (0, 2)])
        assert connected_components(g) == [(0, 2), (1, 3)]

    def test_empty_graph(self):
        assert connected_components(Graph(0)) == []
        assert is_connected(Graph(0))

    def test_isolated_vertices(self):
        assert connected_components(Graph(3)) == [(0,), (1,), (2,)]
        assert not is_connected(Graph(2))

    def test_family_member_connected(self, family_graphs):
        assert is_connected(family_graphs["Q1"])
