"""Brute-force ground truth for small instances.

Exact poset dimension, exact prn of a bipartite graph (the dimension of the
poset a < b for each edge ab with a in A), and the exhaustive width-two sweep
over extended crown graphs.

Two independent dimension routines are provided. :func:`dimension` colors the
critical pairs so that every color class can be reversed by one linear
extension; :func:`dimension_by_extensions` enumerates linear extensions and
searches subsets of them. They share only :func:`poset.is_realizer`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterator

from .errors import BudgetExceeded
from .families import classify_width2, extended_crown, predicted_prn_width2
from .graph import BipartiteGraph
from .poset import Poset, Realizer, _bits, is_realizer, linear_extensions, width_and_cover

__all__ = [
    "OracleBudget",
    "critical_pairs",
    "dimension",
    "dimension_by_extensions",
    "prn_exact",
    "bipartite_poset",
    "max_antichain_bruteforce",
    "width2_posets",
    "SweepRow",
    "SweepReport",
    "sweep_width2",
]


@dataclass(frozen=True)
class OracleBudget:
    max_elements: int = 9
    max_realizer_size: int = 5
    max_linexts: int = 10**6

    def __post_init__(self):
        if min(self.max_elements, self.max_realizer_size, self.max_linexts) < 1:
            raise ValueError("budget fields must be positive")


def _check_size(p: Poset, budget: OracleBudget) -> None:
    if p.n > budget.max_elements:
        raise BudgetExceeded(f"{p.n} elements exceed the budget of {budget.max_elements}")


def critical_pairs(p: Poset) -> list[tuple[int, int]]:
    """Index pairs (a, b), a || b, with D(a) <= D(b) and U(b) <= U(a).

    A family of linear extensions is a realizer iff each critical pair has
    some extension placing b below a.
    """
    down = p.down
    up = p.up
    out = []
    for a in range(p.n):
        for b in range(p.n):
            if a == b or up[a] >> b & 1 or up[b] >> a & 1:
                continue
            if down[a] & ~down[b] == 0 and up[b] & ~up[a] == 0:
                out.append((a, b))
    return out


def _extension_from(up: list[int], n: int) -> list[int]:
    """Least-index-first topological order of a closed up-set relation."""
    indeg = [0] * n
    for i in range(n):
        for j in _bits(up[i]):
            indeg[j] += 1
    ready = sorted(i for i in range(n) if indeg[i] == 0)
    out = []
    while ready:
        i = ready.pop(0)
        out.append(i)
        for j in _bits(up[i]):
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
        ready.sort()
    return out


def _color_pairs(p: Poset, pairs: list[tuple[int, int]], t: int) -> list[list[int]] | None:
    """Assign each pair to one of ``t`` extensions so each extension stays acyclic.

    Each color keeps the transitive closure of P plus its reversals ``b < a``.
    Returns the closed up-sets per color, or None when no assignment exists.
    """
    n = p.n
    colors: list[list[int]] = [list(p.up) for _ in range(t)]
    used = 0
    assigned = [-1] * len(pairs)

    def can(c: int, k: int) -> bool:
        a, b = pairs[k]
        return not colors[c][a] >> b & 1

    def add(c: int, k: int) -> list[int]:
        a, b = pairs[k]
        rel = colors[c]
        saved = list(rel)
        gain = (1 << a) | rel[a]
        for x in range(n):
            if x == b or rel[x] >> b & 1:
                rel[x] |= gain
        return saved

    def rec(left: int) -> bool:
        nonlocal used
        if left == 0:
            return True
        # most constrained pair first
        best, best_opts = -1, None
        for k in range(len(pairs)):
            if assigned[k] != -1:
                continue
            opts = [c for c in range(used) if can(c, k)]
            if used < t:
                opts.append(used)
            if best_opts is None or len(opts) < len(best_opts):
                best, best_opts = k, opts
                if len(opts) <= 1:
                    break
        for c in best_opts:
            fresh = c == used
            saved = add(c, best)
            assigned[best] = c
            if fresh:
                used += 1
            if rec(left - 1):
                return True
            if fresh:
                used -= 1
            assigned[best] = -1
            colors[c] = saved
        return False

    return colors if rec(len(pairs)) else None


def dimension(p: Poset, budget: OracleBudget | None = None) -> tuple[int, Realizer]:
    """Exact dimension with a validated realizer, by coloring critical pairs."""
    budget = budget or OracleBudget()
    _check_size(p, budget)
    if p.n == 0:
        raise ValueError("poset must be nonempty")
    pairs = critical_pairs(p)
    if not pairs:
        ext = tuple(p.elements[i] for i in p.topological_order())
        return 1, Realizer((ext,))
    for t in range(2, budget.max_realizer_size + 1):
        colors = _color_pairs(p, pairs, t)
        if colors is None:
            continue
        exts = [tuple(p.elements[i] for i in _extension_from(c, p.n)) for c in colors]
        realizer = Realizer(exts)
        if not is_realizer(p, realizer):
            raise AssertionError("critical-pair coloring produced a non-realizer")
        return t, realizer
    raise BudgetExceeded(f"dimension exceeds max_realizer_size={budget.max_realizer_size}")


def dimension_by_extensions(p: Poset, budget: OracleBudget | None = None) -> tuple[int, Realizer]:
    """Exact dimension by enumerating linear extensions and searching subsets.

    Branches on the first critical pair not yet reversed, trying only the
    extensions that reverse it.
    """
    budget = budget or OracleBudget()
    _check_size(p, budget)
    exts = []
    for ext in linear_extensions(p):
        exts.append(ext)
        if len(exts) > budget.max_linexts:
            raise BudgetExceeded(f"more than {budget.max_linexts} linear extensions")
    pos = [{p.index(e): k for k, e in enumerate(ext)} for ext in exts]
    pairs = critical_pairs(p)
    if not pairs:
        return 1, Realizer(exts[:1])
    reverses = [
        frozenset(k for k, (a, b) in enumerate(pairs) if ps[b] < ps[a]) for ps in pos
    ]
    by_pair = [[e for e in range(len(exts)) if k in reverses[e]] for k in range(len(pairs))]
    everything = frozenset(range(len(pairs)))

    def search(t: int, covered: frozenset, chosen: list[int]) -> list[int] | None:
        if covered == everything:
            return chosen
        if len(chosen) == t:
            return None
        k = min(everything - covered)
        for e in by_pair[k]:
            found = search(t, covered | reverses[e], chosen + [e])
            if found:
                return found
        return None

    for t in range(2, budget.max_realizer_size + 1):
        found = search(t, frozenset(), [])
        if found:
            realizer = Realizer([exts[e] for e in found])
            if not is_realizer(p, realizer):
                raise AssertionError("extension search produced a non-realizer")
            return t, realizer
    raise BudgetExceeded(f"dimension exceeds max_realizer_size={budget.max_realizer_size}")


def bipartite_poset(g: BipartiteGraph) -> Poset:
    """Poset on all vertices with a < b for every edge ab, a in A."""
    up = [0] * g.n
    for a in g.part_a:
        for b in g.neighbors(a):
            up[a] |= 1 << b
    return Poset(tuple(range(g.n)), tuple(up), g.labels)


def prn_exact(g: BipartiteGraph, budget: OracleBudget | None = None, method: str = "coloring") -> int:
    """Exact prn of ``g`` as the dimension of its bipartite poset."""
    p = bipartite_poset(g)
    if method == "coloring":
        return dimension(p, budget)[0]
    if method == "extensions":
        return dimension_by_extensions(p, budget)[0]
    raise ValueError(f"unknown method {method!r}")


def max_antichain_bruteforce(p: Poset) -> tuple:
    """A largest antichain by scanning subsets from the largest size down."""
    for size in range(p.n, 0, -1):
        for combo in combinations(p.elements, size):
            if p.is_antichain(combo):
                return combo
    return ()


# ---------------------------------------------------------------------------
# width-two sweep


def _canonical(up: tuple[int, ...]) -> tuple[int, ...]:
    """Least relabeled up-set tuple over orders respecting (|down|, |up|) classes."""
    n = len(up)
    down = [0] * n
    for i in range(n):
        for j in _bits(up[i]):
            down[j] |= 1 << i
    sig = [(bin(down[i]).count("1"), bin(up[i]).count("1")) for i in range(n)]
    classes: dict = {}
    for i in sorted(range(n), key=lambda i: sig[i]):
        classes.setdefault(sig[i], []).append(i)
    groups = [classes[k] for k in sorted(classes)]

    def orders(gs) -> Iterator[list[int]]:
        if not gs:
            yield []
            return
        for head in permutations(gs[0]):
            for rest in orders(gs[1:]):
                yield list(head) + rest

    best = None
    for order in orders(groups):
        new = {old: k for k, old in enumerate(order)}
        cand = tuple(
            sum(1 << new[j] for j in _bits(up[old])) for old in order
        )
        if best is None or cand < best:
            best = cand
    return best


def width2_posets(max_n: int) -> Iterator[Poset]:
    """All posets of width at most two with 2..max_n elements, one per isomorphism class.

    Each poset of size n arises from one of size n-1 by adding a maximal
    element above a down-closed subset; width never drops when adding elements,
    so wider intermediates are discarded.
    """
    level = {(0,)}  # single element
    for n in range(2, max_n + 1):
        nxt = set()
        for up in level:
            m = len(up)
            down = [0] * m
            for i in range(m):
                for j in _bits(up[i]):
                    down[j] |= 1 << i
            for s in range(1 << m):
                if any(s >> i & 1 and down[i] & ~s for i in range(m)):
                    continue
                new_up = tuple(up[i] | (1 << m if s >> i & 1 else 0) for i in range(m)) + (0,)
                p = Poset(tuple(range(n)), new_up)
                if width_and_cover(p)[0] <= 2:
                    nxt.add(_canonical(new_up))
        level = nxt
        for up in sorted(level):
            yield Poset(tuple(range(n)), up)


@dataclass(frozen=True)
class SweepRow:
    poset: dict
    cls: str
    predicted_prn: int
    exact_prn: int

    @property
    def ok(self) -> bool:
        return self.predicted_prn == self.exact_prn

    def as_dict(self) -> dict:
        return {
            "poset": self.poset,
            "class": self.cls,
            "predicted_prn": self.predicted_prn,
            "exact_prn": self.exact_prn,
        }


@dataclass(frozen=True)
class SweepReport:
    rows: tuple[SweepRow, ...]
    mismatches: tuple[SweepRow, ...] = field(default=())

    def jsonl(self) -> str:
        import json

        return "".join(json.dumps(r.as_dict()) + "\n" for r in self.rows)


def sweep_width2(max_n: int, budget: OracleBudget | None = None) -> SweepReport:
    """Compare the cover-graph prediction with the exact prn of every width-two
    (and chain) poset's extended crown graph up to ``max_n`` elements."""
    if not 2 <= max_n <= 7:
        raise ValueError("max_n must be between 2 and 7")
    budget = budget or OracleBudget(max_elements=2 * max_n)
    rows = []
    for p in width2_posets(max_n):
        w, _ = width_and_cover(p)
        if w == 1:
            cls, predicted = "chain", 2
        else:
            cls = classify_width2(p)
            predicted = predicted_prn_width2(cls)
        ecg = extended_crown(p)
        exact = prn_exact(ecg.graph, budget)
        covers = [[p.name_of(a), p.name_of(b)] for a, b in p.cover_pairs()]
        rows.append(SweepRow({"elements": list(p.names), "covers": covers}, cls, predicted, exact))
    return SweepReport(tuple(rows), tuple(r for r in rows if not r.ok))
