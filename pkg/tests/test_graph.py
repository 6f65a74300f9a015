import pytest

from bipartite_prn.errors import OddCycle, SizeLimit
from bipartite_prn.families import complete_bipartite, crown, forbidden_prn2
from bipartite_prn.graph import (
    BipartiteGraph,
    Graph,
    contains_induced,
    detect_bipartition,
    disjoint_union,
    reduce,
)

from sample_graphs import g3, g4, g5, twin_graph


def part_labels(g, side):
    return sorted((g.labels[v] for v in g.part(side)), key=int)


class TestGraph:
    def test_from_edges_by_label_and_id(self):
        g = Graph.from_edges(["x", "y", "z"], [("x", "y"), (1, 2)])
        assert g.has_edge(0, 1) and g.has_edge(2, 1) and not g.has_edge(0, 2)
        assert g.degree(1) == 2

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 0)])

    def test_rejects_duplicate_labels(self):
        with pytest.raises(ValueError):
            Graph.from_edges(["a", "a"], [])

    def test_rejects_asymmetric_adjacency(self):
        with pytest.raises(ValueError):
            Graph(("a", "b"), (frozenset({1}), frozenset()))

    def test_components(self):
        g = Graph.from_edges(5, [(0, 1), (3, 4)])
        assert g.components() == [[0, 1], [2], [3, 4]]
        assert not g.is_connected()

    def test_induced_keeps_labels(self):
        g = Graph.from_edges(["p", "q", "r"], [("p", "q"), ("q", "r")])
        h = g.induced([0, 2])
        assert h.labels == ("p", "r") and h.edges() == []


class TestBipartition:
    def test_single_edge(self):
        b = detect_bipartition(Graph.from_edges(2, [(0, 1)]))
        assert b.part_a == {0} and b.part_b == {1}

    def test_triangle_raises_with_witness(self):
        with pytest.raises(OddCycle) as exc:
            detect_bipartition(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))
        assert sorted(exc.value.witness) == [0, 1, 2]

    def test_odd_cycle_witness_is_a_cycle(self):
        g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5)])
        with pytest.raises(OddCycle) as exc:
            detect_bipartition(g)
        w = exc.value.witness
        assert len(w) % 2 == 1
        assert all(g.has_edge(w[i], w[(i + 1) % len(w)]) for i in range(len(w)))

    def test_twin_graph_parts(self):
        g = twin_graph()
        assert part_labels(g, "A") == ["1", "2", "3", "4"]
        assert part_labels(g, "B") == ["5", "6", "7", "8", "9"]

    def test_least_vertex_of_each_component_in_a(self):
        b = detect_bipartition(Graph.from_edges(4, [(1, 0), (3, 2)]))
        assert b.part_a == {0, 2}

    def test_bipartite_graph_validates_edges(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        with pytest.raises(ValueError):
            BipartiteGraph(g, frozenset({0, 1}), frozenset({2}))


class TestReduce:
    def test_twin_graph(self):
        red = reduce(twin_graph())
        assert red.reduced.n == 7
        merged = [
            sorted(red.original.labels[v] for v in t) for t in red.twins if len(t) > 1
        ]
        assert merged == [["3", "4"], ["6", "8"]]
        assert red.reduced.labels == ("1", "2", "3", "5", "6", "7", "9")

    def test_crown_is_identity(self):
        assert reduce(crown(3)).is_identity

    def test_k22_collapses_to_edge(self):
        red = reduce(complete_bipartite(2, 2))
        assert red.reduced.n == 2 and red.reduced.graph.edges() == [(0, 1)]

    def test_representative_is_least_id(self):
        red = reduce(complete_bipartite(3, 2))
        assert [t[0] for t in red.twins] == [0, 3]


class TestContainsInduced:
    def test_single_vertex(self):
        h = Graph.from_edges(1, [])
        assert contains_induced(g3().graph, h) == {0: 0}

    def test_forbidden_subgraphs(self):
        s1, s2, s3 = forbidden_prn2()
        assert contains_induced(g3().graph, s1) is not None
        assert contains_induced(g4().graph, s1) is not None
        assert contains_induced(g5().graph, s2) is not None

    def test_witness_is_induced(self):
        s1 = forbidden_prn2()[0]
        g = g3().graph
        m = contains_induced(g, s1)
        for x in range(s1.n):
            for y in range(x + 1, s1.n):
                assert g.has_edge(m[x], m[y]) == s1.has_edge(x, y)

    def test_absent(self):
        # a 6-cycle has no induced claw
        claw = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert contains_induced(crown(3).graph, claw) is None

    def test_size_cap(self):
        with pytest.raises(SizeLimit):
            contains_induced(complete_bipartite(13, 13).graph, Graph.from_edges(1, []))


def test_disjoint_union_offsets():
    a = Graph.from_edges(["a", "b"], [("a", "b")])
    b = Graph.from_edges(["c", "d", "e"], [("c", "e")])
    u, offsets = disjoint_union([a, b])
    assert offsets == [[0, 1], [2, 3, 4]]
    assert u.edges() == [(0, 1), (2, 4)]
