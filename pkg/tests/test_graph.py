import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _util import all_labeled_graphs, random_graph, rng
from kcritical.errors import GraphInputError
from kcritical.graph import (
    Graph,
    build_graph,
    complete,
    component_report,
    delete_vertices,
    empty,
    is_connected,
    is_k_connected,
    join,
    union,
)


def hub_example():
    return join(complete(2), union(complete(3), empty(2)))


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


class TestConstructors:
    def test_triangle(self):
        g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
        assert g == complete(3) and g.e == 3

    def test_edgeless_and_dedup(self):
        assert build_graph(2, []).e == 0
        assert build_graph(4, [(0, 1), (0, 1), (2, 3)]).e == 2
        assert build_graph(4, [(1, 0), (0, 1)]).e == 1

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
    def test_bad_edges(self, edges):
        with pytest.raises(GraphInputError):
            build_graph(3, edges)

    def test_asymmetric_rows_rejected(self):
        with pytest.raises(GraphInputError):
            Graph(2, (0b10, 0))

    @pytest.mark.parametrize("n,e", [(5, 10), (1, 0), (0, 0)])
    def test_complete(self, n, e):
        g = complete(n)
        assert g.e == e
        assert all(d == n - 1 for d in g.degrees())

    def test_union(self):
        g = union(complete(3), empty(2))
        assert (g.n, g.e, component_report(g).component_count) == (5, 3, 3)
        g = union(complete(2), complete(2))
        assert g.e == 2 and component_report(g).component_count == 2
        h = path(4)
        assert union(empty(0), h) == h

    def test_join(self):
        g = hub_example()
        assert (g.n, g.e) == (7, 14)
        assert join(complete(1), complete(1)) == complete(2)
        h = path(4)
        assert join(empty(0), h) == h

    def test_delete_vertices(self):
        sub, kept = delete_vertices(complete(4), [0, 1])
        assert sub == complete(2) and kept == [2, 3]
        sub, kept = delete_vertices(hub_example(), [0, 1])
        assert sub == union(complete(3), empty(2))
        assert kept == [2, 3, 4, 5, 6]
        h = path(5)
        assert delete_vertices(h, [])[0] == h
        with pytest.raises(GraphInputError):
            delete_vertices(h, [7])


class TestComponents:
    def test_examples(self):
        r = component_report(union(complete(3), empty(2)))
        assert (r.component_count, r.odd_count) == (3, 3)
        r = component_report(union(complete(2), complete(2)))
        assert (r.component_count, r.odd_count) == (2, 0)
        r = component_report(complete(5))
        assert (r.component_count, r.odd_count) == (1, 1)

    def test_report_invariants_random(self):
        gen = rng(3)
        for _ in range(300):
            n = int(gen.integers(0, 12))
            g = random_graph(gen, n, gen.uniform(0, 0.5))
            r = component_report(g)
            seen = sorted(v for c in r.components for v in c)
            assert seen == list(range(n))
            assert r.odd_count == sum(len(c) % 2 for c in r.components)
            assert r.odd_count <= r.component_count
            assert r.odd_count % 2 == n % 2


class TestConnectivity:
    def test_examples(self):
        assert is_k_connected(complete(4), 3)
        assert not is_k_connected(complete(4), 4)
        assert not is_k_connected(path(3), 2)
        g = hub_example()
        assert is_k_connected(g, 2) and not is_k_connected(g, 3)

    def test_one_connected_iff_connected(self):
        for n in range(0, 7):
            for g in all_labeled_graphs(n):
                assert is_k_connected(g, 1) == (is_connected(g) and n >= 2)

    def test_zero_connected(self):
        assert is_k_connected(empty(1), 0)
        assert not is_k_connected(empty(0), 0)

    def test_exhaustive_matches_flow(self):
        gen = rng(11)
        for _ in range(150):
            n = int(gen.integers(2, 11))
            g = random_graph(gen, n)
            for k in range(0, 5):
                assert is_k_connected(g, k, "exhaustive") == is_k_connected(g, k, "flow")


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 9), st.data())
def test_degree_sum(n, data):
    edges = data.draw(st.lists(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0)))))
    edges = [(u, v) for u, v in edges if u != v]
    g = build_graph(n, edges)
    assert sum(g.degrees()) == 2 * g.e == 2 * len(g.edges())


def test_join_union_arithmetic():
    gen = rng(5)
    for _ in range(200):
        a = random_graph(gen, int(gen.integers(0, 8)))
        b = random_graph(gen, int(gen.integers(0, 8)))
        assert join(a, b).e == a.e + b.e + a.n * b.n
        assert union(a, b).e == a.e + b.e
        assert union(a, b).n == join(a, b).n == a.n + b.n


def test_relabel_preserves_degrees():
    gen = rng(8)
    g = random_graph(gen, 9)
    perm = [int(x) for x in gen.permutation(9)]
    h = g.relabel(perm)
    assert sorted(h.degrees()) == sorted(g.degrees()) and h.e == g.e
    for u, v in g.edges():
        assert h.has_edge(perm[u], perm[v])
