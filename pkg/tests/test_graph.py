import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphcenter.errors import DisconnectedGraph, EmptyGraph, OrderTooLarge, SelfLoop, VertexOutOfRange
from graphcenter.graph import (
    MAX_ORDER,
    UNREACHABLE,
    Graph,
    all_pairs_distances,
    attach_path,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    induced_subgraph,
    is_connected,
    join,
    metric_profile,
    path_graph,
)
from graphcenter.constructions import hedetniemi
from graphcenter.isomorphism import are_isomorphic

from oracles import floyd_warshall, metrics, random_connected_edges, random_edges, seeded_rng


@st.composite
def graphs(draw, min_order=0, max_order=9):
    n = draw(st.integers(min_order, max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


@st.composite
def connected_graphs(draw, max_order=9):
    n = draw(st.integers(1, max_order))
    seed = draw(st.integers(0, 2**32 - 1))
    p = draw(st.floats(0.0, 0.6))
    return Graph(n, random_connected_edges(n, p, seeded_rng(seed)))


def _fw(g):
    return floyd_warshall(g.order, g.edges())


class TestFromEdgeList:
    def test_path(self):
        g = from_edge_list(3, [(0, 1), (1, 2)])
        assert g.edges() == [(0, 1), (1, 2)]
        assert g == path_graph(3)

    def test_duplicates_collapse(self):
        assert from_edge_list(3, [(0, 1), (1, 0)]).edge_count == 1

    def test_out_of_range(self):
        with pytest.raises(VertexOutOfRange):
            from_edge_list(2, [(0, 2)])

    def test_self_loop(self):
        with pytest.raises(SelfLoop):
            from_edge_list(2, [(1, 1)])

    def test_order_bound(self):
        with pytest.raises(OrderTooLarge):
            Graph(MAX_ORDER + 1)


class TestComposition:
    def test_union_of_singletons(self):
        g = disjoint_union(complete_graph(1), complete_graph(1))
        assert g.order == 2 and g.edge_count == 0

    def test_union_edge_counts_add(self):
        g = disjoint_union(complete_graph(3), complete_graph(2))
        assert (g.order, g.edge_count) == (5, 4)
        assert (3, 4) in g.edges()

    def test_union_with_null_graph(self):
        g = cycle_graph(5)
        assert disjoint_union(g, empty_graph(0)) == g

    def test_join_k1_k1(self):
        assert join(complete_graph(1), complete_graph(1)) == complete_graph(2)

    def test_join_k2_with_two_isolated(self):
        g = join(complete_graph(2), empty_graph(2))
        # K_4 minus the edge between the two formerly isolated vertices
        missing = {(u, v) for u in range(4) for v in range(u + 1, 4)} - set(g.edges())
        assert missing == {(2, 3)}

    @settings(max_examples=60)
    @given(graphs(min_order=1, max_order=6), graphs(min_order=1, max_order=6))
    def test_join_diameter_at_most_two(self, a, b):
        g = join(a, b)
        assert max(max(row) for row in _fw(g)) <= 2

    def test_attach_path_to_k1(self):
        assert attach_path(complete_graph(1), 0, 4) == path_graph(5)

    def test_attach_zero_is_identity(self):
        g = cycle_graph(4)
        assert attach_path(g, 2, 0) is g

    @pytest.mark.parametrize("length", [1, 2, 5])
    def test_attach_path_far_end_distance(self, length):
        g = attach_path(cycle_graph(5), 3, length)
        assert _fw(g)[3][g.order - 1] == length

    def test_attach_path_bad_vertex(self):
        with pytest.raises(VertexOutOfRange):
            attach_path(cycle_graph(4), 4, 1)


class TestInducedSubgraph:
    def test_identity(self):
        sub, ids = induced_subgraph(cycle_graph(5), range(5))
        assert sub == cycle_graph(5)
        assert ids == {v: v for v in range(5)}

    def test_k4_to_k3(self):
        sub, _ = induced_subgraph(complete_graph(4), {0, 1, 2})
        assert sub == complete_graph(3)

    def test_middle_of_p5(self):
        sub, ids = induced_subgraph(path_graph(5), {1, 2, 3})
        assert sub.edges() == [(0, 1), (1, 2)]
        assert ids == {1: 0, 2: 1, 3: 2}

    def test_out_of_range(self):
        with pytest.raises(VertexOutOfRange):
            induced_subgraph(path_graph(3), {0, 7})


class TestDistances:
    def test_p3(self):
        assert all_pairs_distances(path_graph(3))[0, 2] == 2

    def test_c6_antipodes(self):
        dm = all_pairs_distances(cycle_graph(6))
        assert all(dm[v, (v + 3) % 6] == 3 for v in range(6))

    def test_unreachable_marker(self):
        dm = all_pairs_distances(empty_graph(2))
        assert dm[0, 1] is UNREACHABLE
        assert not dm.is_connected()

    def test_matches_floyd_warshall_on_random_graphs(self):
        rng = seeded_rng(7)
        for _ in range(200):
            n = rng.randint(1, 12)
            edges = random_edges(n, rng.random() * 0.5, rng)
            dm = all_pairs_distances(Graph(n, edges))
            fw = floyd_warshall(n, edges)
            assert [[None if x is UNREACHABLE else x for x in row] for row in dm.entries] == fw

    @settings(max_examples=100)
    @given(graphs())
    def test_matrix_axioms(self, g):
        dm = all_pairs_distances(g)
        n = g.order
        for u in range(n):
            assert dm[u, u] == 0
            for v in range(n):
                assert dm[u, v] == dm[v, u]
                assert (dm[u, v] == 1) == g.has_edge(u, v)
                for w in range(n):
                    if UNREACHABLE not in (dm[u, v], dm[v, w], dm[u, w]):
                        assert dm[u, w] <= dm[u, v] + dm[v, w]


class TestMetricProfile:
    def test_p5(self):
        p = metric_profile(path_graph(5))
        assert (p.radius, p.diameter, p.center_vertices) == (2, 4, frozenset({2}))

    def test_c6(self):
        p = metric_profile(cycle_graph(6))
        assert (p.radius, p.diameter, p.center_vertices) == (3, 3, frozenset(range(6)))

    def test_figure1_with_k3(self):
        lg = hedetniemi(complete_graph(3), 2)
        p = metric_profile(lg.graph)
        _, rad, diam, cen = metrics(lg.order, lg.graph.edges())
        assert (p.radius, p.diameter) == (rad, diam) == (2, 4)
        assert p.center_vertices == cen == lg.center_image

    def test_empty_graph_rejected(self):
        with pytest.raises(EmptyGraph):
            metric_profile(empty_graph(0))

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraph):
            metric_profile(empty_graph(2))

    @settings(max_examples=150)
    @given(connected_graphs())
    def test_profile_invariants(self, g):
        p = metric_profile(g)
        ecc, rad, diam, cen = metrics(g.order, g.edges())
        assert list(p.ecc) == ecc
        assert (p.radius, p.diameter, set(p.center_vertices)) == (rad, diam, cen)
        assert p.radius <= p.diameter <= 2 * p.radius
        assert p.center_vertices
        for u, v in g.edges():
            assert abs(p.ecc[u] - p.ecc[v]) <= 1


def test_components():
    g = disjoint_union(cycle_graph(3), path_graph(2))
    assert connected_components(g) == [[0, 1, 2], [3, 4]]
    assert not is_connected(g)
    assert is_connected(cycle_graph(3))
    assert not is_connected(empty_graph(0))


def test_graph_is_hashable_and_labeled():
    a = path_graph(3)
    b = Graph(3, [(0, 2), (1, 2)])
    assert a != b
    assert are_isomorphic(a, b) is not None
    assert len({a, path_graph(3), b}) == 2
