import json
from itertools import permutations

import pytest

from bipartite_prn.errors import BudgetExceeded
from bipartite_prn.families import complete_bipartite, crown, crown_with_universal
from bipartite_prn.oracle import (
    OracleBudget,
    bipartite_poset,
    critical_pairs,
    dimension,
    dimension_by_extensions,
    max_antichain_bruteforce,
    prn_exact,
    sweep_width2,
    width2_posets,
)
from bipartite_prn.poset import Poset, is_realizer, width_and_cover

from sample_graphs import cycle_poset, g3, g4, g5, twin_graph


def standard_example(n):
    a = [f"a{i}" for i in range(n)]
    b = [f"b{i}" for i in range(n)]
    return Poset.from_relations(a + b, [(x, y) for i, x in enumerate(a) for j, y in enumerate(b) if i != j])


class TestDimension:
    def test_chain(self):
        t, r = dimension(Poset.chain(4))
        assert t == 1 and is_realizer(Poset.chain(4), r)

    def test_antichain(self):
        assert dimension(Poset.antichain(4))[0] == 2

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_standard_example(self, n):
        p = standard_example(n)
        t, r = dimension(p)
        assert t == n and len(r) == n and is_realizer(p, r)

    def test_single_element(self):
        assert dimension(Poset.chain(1))[0] == 1

    def test_critical_pairs_of_antichain(self):
        assert len(critical_pairs(Poset.antichain(3))) == 6

    def test_critical_pairs_of_chain(self):
        assert critical_pairs(Poset.chain(3)) == []

    @pytest.mark.parametrize(
        "p",
        [
            cycle_poset(3, 2),
            standard_example(3),
            Poset.from_relations("abcde", [("a", "b"), ("c", "d"), ("a", "d"), ("e", "b")]),
        ],
        ids=["cycle", "standard3", "mixed"],
    )
    def test_methods_agree(self, p):
        assert dimension(p)[0] == dimension_by_extensions(p)[0]

    def test_budget_elements(self):
        with pytest.raises(BudgetExceeded):
            dimension(Poset.antichain(10))
        assert dimension(Poset.antichain(10), OracleBudget(max_elements=10))[0] == 2

    def test_budget_realizer(self):
        with pytest.raises(BudgetExceeded):
            dimension(standard_example(3), OracleBudget(max_realizer_size=2))

    def test_budget_linexts(self):
        with pytest.raises(BudgetExceeded):
            dimension_by_extensions(Poset.antichain(6), OracleBudget(max_linexts=100))

    def test_bad_budget(self):
        with pytest.raises(ValueError):
            OracleBudget(max_elements=0)


class TestPrn:
    def test_bipartite_poset_orders_a_below_b(self):
        g = complete_bipartite(1, 2)
        p = bipartite_poset(g)
        a1, b1, b2 = (g.graph.index(s) for s in ("a1", "b1", "b2"))
        assert p.lt(a1, b1) and p.lt(a1, b2) and not p.lt(b1, b2)
        assert p.names == g.labels

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_crowns(self, n):
        assert prn_exact(crown(n)) == n

    def test_complete(self):
        assert prn_exact(complete_bipartite(1, 1)) == 1
        assert prn_exact(complete_bipartite(2, 2)) == 2

    def test_prn3_graphs(self):
        for g in (g3(), g4(), g5()):
            assert prn_exact(g) == 3

    def test_twin_graph(self):
        assert prn_exact(twin_graph()) == 2

    def test_universal(self):
        assert prn_exact(crown_with_universal(3), OracleBudget(max_elements=10)) == 3

    def test_methods_agree(self):
        for g in (crown(3), g4()):
            assert prn_exact(g, method="extensions") == prn_exact(g)

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            prn_exact(crown(2), method="magic")


def test_max_antichain_bruteforce():
    p = cycle_poset(4, 2)
    assert len(max_antichain_bruteforce(p)) == width_and_cover(p)[0] == 2


def _isomorphic(p, q):
    if p.n != q.n or len(p.relations()) != len(q.relations()):
        return False
    rel = set(p.relations())
    for perm in permutations(q.elements):
        m = dict(zip(p.elements, perm))
        if all(q.lt(m[a], m[b]) for a, b in rel):
            return True
    return False


class TestWidth2Posets:
    def test_counts(self):
        sizes = [p.n for p in width2_posets(6)]
        assert [sizes.count(n) for n in range(2, 7)] == [2, 4, 10, 26, 75]

    def test_widths(self):
        assert all(width_and_cover(p)[0] <= 2 for p in width2_posets(5))

    def test_pairwise_non_isomorphic(self):
        ps = [p for p in width2_posets(5) if p.n == 5]
        for i, p in enumerate(ps):
            for q in ps[i + 1:]:
                assert not _isomorphic(p, q)

    def test_every_labeled_poset_is_represented(self):
        # all width <= 2 posets on 4 labeled elements, up to isomorphism
        reps = [p for p in width2_posets(4) if p.n == 4]
        pairs = [(i, j) for i in range(4) for j in range(4) if i != j]
        for mask in range(1 << len(pairs)):
            rel = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
            try:
                p = Poset.from_relations(range(4), rel)
            except ValueError:
                continue
            if len(p.relations()) != len(rel) or width_and_cover(p)[0] > 2:
                continue  # count each closed order once
            assert any(_isomorphic(p, q) for q in reps)


class TestSweep:
    def test_small(self):
        rep = sweep_width2(4)
        assert len(rep.rows) == 16 and rep.mismatches == ()
        classes = {r.cls for r in rep.rows}
        assert classes == {"chain", "disconnected_cover", "path_type1", "path_type2", "cycle", "other_connected"}

    def test_medium(self):
        rep = sweep_width2(6)
        assert len(rep.rows) == 117 and rep.mismatches == ()

    def test_jsonl(self):
        rep = sweep_width2(3)
        lines = rep.jsonl().splitlines()
        assert len(lines) == len(rep.rows) == 6
        row = json.loads(lines[0])
        assert set(row) == {"poset", "class", "predicted_prn", "exact_prn"}

    def test_range(self):
        with pytest.raises(ValueError):
            sweep_width2(8)
        with pytest.raises(ValueError):
            sweep_width2(1)
