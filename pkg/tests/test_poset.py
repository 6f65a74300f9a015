import pytest

from bipartite_prn.errors import InvalidCover, NotReduced
from bipartite_prn.families import complete_bipartite, crown
from bipartite_prn.matching import hopcroft_karp
from bipartite_prn.oracle import max_antichain_bruteforce
from bipartite_prn.poset import (
    ChainCover,
    Poset,
    Realizer,
    dimension_bounds,
    is_realizer,
    linear_extensions,
    neighborhood_poset,
    width_and_cover,
)

from sample_graphs import g3, twin_graph, wide_graph


def names(p, chain):
    return [p.name_of(x) for x in chain]


class TestPoset:
    def test_transitive_closure(self):
        p = Poset.from_relations("abc", [("a", "b"), ("b", "c")])
        assert p.lt("a", "c") and not p.lt("c", "a")
        assert p.is_chain() and p.height() == 3

    def test_cycle_rejected(self):
        with pytest.raises(ValueError):
            Poset.from_relations("ab", [("a", "b"), ("b", "a")])

    def test_unclosed_rejected(self):
        with pytest.raises(ValueError):
            Poset((0, 1, 2), (0b010, 0b100, 0))

    def test_cover_pairs(self):
        p = Poset.from_relations("abcd", [("a", "b"), ("b", "c"), ("a", "c"), ("a", "d")])
        assert sorted(p.cover_pairs()) == [("a", "b"), ("a", "d"), ("b", "c")]

    def test_minimal_maximal_dual(self):
        p = Poset.from_relations("abc", [("a", "b"), ("a", "c")])
        assert p.minimal() == ["a"] and p.maximal() == ["b", "c"]
        assert p.dual().minimal() == ["b", "c"]

    def test_antichain(self):
        p = Poset.antichain(3)
        assert p.is_antichain() and p.height() == 1


class TestNeighborhoodPoset:
    def test_wide_graph_widths(self):
        g = wide_graph()
        pa, pb = neighborhood_poset(g, "A"), neighborhood_poset(g, "B")
        assert width_and_cover(pa)[0] == 3 and width_and_cover(pb)[0] == 3
        assert pa.lt(g.graph.index("1"), g.graph.index("4"))
        assert pb.lt(g.graph.index("7"), g.graph.index("8"))

    def test_not_reduced(self):
        with pytest.raises(NotReduced) as exc:
            neighborhood_poset(twin_graph(), "A")
        assert exc.value.pair == ("3", "4")

    def test_crown_is_antichain(self):
        assert neighborhood_poset(crown(4), "A").is_antichain()

    def test_g3_relations(self):
        g = g3()
        p = neighborhood_poset(g, "A")
        rel = sorted((g.labels[a], g.labels[b]) for a, b in p.relations())
        assert rel == [("3", "1"), ("3", "5"), ("5", "1"), ("7", "1"), ("7", "5")]


class TestWidth:
    def test_chain_and_antichain(self):
        assert width_and_cover(Poset.chain(5))[0] == 1
        assert width_and_cover(Poset.antichain(4))[0] == 4

    def test_cover_is_valid(self):
        p = neighborhood_poset(wide_graph(), "A")
        w, cover = width_and_cover(p)
        cover.validate(p)
        assert len(cover) == w

    def test_dilworth_equals_bruteforce(self):
        p = neighborhood_poset(wide_graph(), "B")
        assert width_and_cover(p)[0] == len(max_antichain_bruteforce(p))

    def test_invalid_cover(self):
        p = Poset.from_relations("abc", [("a", "b")])
        with pytest.raises(InvalidCover):
            ChainCover((("a", "c"), ("b",))).validate(p)
        with pytest.raises(InvalidCover):
            ChainCover((("a", "b"),)).validate(p)


def test_hopcroft_karp_perfect():
    match = hopcroft_karp([[0, 1], [0], [2]], 3)
    assert sorted(match) == [0, 1, 2] and match[1] == 0


def test_hopcroft_karp_deficient():
    match = hopcroft_karp([[0], [0], [0]], 1)
    assert sorted(match) == [-1, -1, 0]


class TestDimensionBounds:
    def test_chain(self):
        assert dimension_bounds(Poset.chain(4)).upper == 1

    def test_antichain(self):
        assert dimension_bounds(Poset.antichain(5)).upper == 2

    def test_small_poset_has_no_half_bound(self):
        b = dimension_bounds(Poset.from_relations("abc", [("a", "b")]))
        assert b.half is None and b.upper == 2

    def test_crown_poset(self):
        from bipartite_prn.oracle import bipartite_poset

        b = dimension_bounds(bipartite_poset(crown(4)))
        assert b.width == 4 and b.upper == 4


def test_linear_extensions_count():
    p = Poset.from_relations("abc", [("a", "b")])
    assert len(list(linear_extensions(p))) == 3
    assert len(list(linear_extensions(Poset.antichain(4)))) == 24


def test_is_realizer():
    p = Poset.antichain(2)
    assert is_realizer(p, Realizer([(0, 1), (1, 0)]))
    assert not is_realizer(p, Realizer([(0, 1)]))
    q = Poset.from_relations("ab", [("a", "b")])
    assert not is_realizer(q, Realizer([("b", "a")]))


def test_complete_bipartite_poset_dimension_two_realizer():
    from bipartite_prn.oracle import bipartite_poset

    p = bipartite_poset(complete_bipartite(2, 2))
    r = Realizer([(0, 1, 2, 3), (1, 0, 3, 2)])
    assert is_realizer(p, r)
