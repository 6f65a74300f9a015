"""Word semantics: projection, alternation, representation checks and decoding."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import MissingVertex
from .graph import Graph

__all__ = [
    "PermSequence",
    "Verdict",
    "project",
    "alternates",
    "represents",
    "is_uniform",
    "decode",
    "structural_violations",
]


@dataclass(frozen=True)
class PermSequence:
    """A word split into permutations of one common vertex set."""

    perms: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        perms = tuple(tuple(p) for p in self.perms)
        object.__setattr__(self, "perms", perms)
        if not perms:
            return
        ground = set(perms[0])
        for p in perms:
            if len(p) != len(ground) or set(p) != ground:
                raise ValueError("every entry must be a permutation of the same vertex set")

    def __len__(self):
        return len(self.perms)

    def __iter__(self):
        return iter(self.perms)

    def __getitem__(self, i):
        return self.perms[i]

    def flatten(self) -> tuple[int, ...]:
        return tuple(v for p in self.perms for v in p)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.perms[0]) if self.perms else frozenset()


@dataclass(frozen=True)
class Verdict:
    ok: bool
    pair: tuple | None = None
    projection: tuple | None = None
    adjacent: bool | None = None

    def __bool__(self):
        return self.ok


def project(w: Iterable[Hashable], s) -> tuple:
    s = set(s)
    return tuple(x for x in w if x in s)


def _strictly_alternating(seq: Sequence) -> bool:
    return all(seq[i] != seq[i + 1] for i in range(len(seq) - 1))


def alternates(w: Sequence[Hashable], u, v) -> bool:
    if u == v:
        raise ValueError("alternation needs two distinct letters")
    return _strictly_alternating(project(w, (u, v)))


def _positions(w: Sequence[Hashable]) -> dict:
    pos: dict = {}
    for i, x in enumerate(w):
        pos.setdefault(x, []).append(i)
    return pos


def _alternate_from_positions(pu: list[int], pv: list[int]) -> bool:
    if abs(len(pu) - len(pv)) > 1:
        return False
    # merge and look for two consecutive occurrences of the same letter
    i = j = 0
    last = None
    while i < len(pu) or j < len(pv):
        if j == len(pv) or (i < len(pu) and pu[i] < pv[j]):
            cur, i = 0, i + 1
        else:
            cur, j = 1, j + 1
        if cur == last:
            return False
        last = cur
    return True


def represents(w: Sequence[int], g: Graph) -> Verdict:
    """Check whether ``w`` represents ``g``.

    Pairs are scanned in ascending id order; the first pair whose alternation
    disagrees with adjacency is returned together with its projection.
    """
    pos = _positions(w)
    for v in range(g.n):
        if v not in pos:
            raise MissingVertex(g.labels[v])
    extra = set(pos) - set(range(g.n))
    if extra:
        raise ValueError(f"word contains letters outside the graph: {sorted(extra)}")
    for u, v in combinations(range(g.n), 2):
        alt = _alternate_from_positions(pos[u], pos[v])
        adj = g.has_edge(u, v)
        if alt != adj:
            return Verdict(False, (u, v), project(w, (u, v)), adj)
    return Verdict(True)


def is_uniform(w: Sequence[Hashable]) -> int | None:
    counts: dict = {}
    for x in w:
        counts[x] = counts.get(x, 0) + 1
    values = set(counts.values())
    if len(values) == 1:
        return values.pop()
    return None


def decode(w: Sequence[Hashable], names: Mapping | Sequence[str] | None = None) -> Graph:
    """Graph on the sorted letter set of ``w``; edges join alternating letters.

    Vertex ``i`` of the result is the ``i``-th smallest letter. ``names`` maps
    letters to labels (defaults to ``str(letter)``).
    """
    letters = sorted(set(w))
    pos = _positions(w)
    edges = [
        (i, j)
        for (i, a), (j, b) in combinations(enumerate(letters), 2)
        if _alternate_from_positions(pos[a], pos[b])
    ]
    if names is None:
        labels = [str(x) for x in letters]
    else:
        labels = [names[x] for x in letters]
    return Graph.from_edges(labels, edges)


def structural_violations(perms: Iterable[Sequence[int]], g: Graph) -> list[str]:
    """Scan permutations of a bipartite graph for the three neighbor-placement rules.

    1. no permutation contains ``a b c`` with ``b`` a common neighbor of ``a`` and ``c``;
    2. the neighbors of each vertex sit on one side of it;
    3. vertices sharing a neighbor put their neighborhoods on the same side.
    Returns human-readable descriptions of every violation found.
    """
    out = []
    lab = g.labels
    for t, p in enumerate(perms):
        where = {v: i for i, v in enumerate(p)}
        side = {}
        for b in range(g.n):
            nb = sorted(g.neighbors(b), key=where.__getitem__)
            left = [a for a in nb if where[a] < where[b]]
            right = [a for a in nb if where[a] > where[b]]
            if left and right:
                # rules 1 and 2 fail together
                out.append(
                    f"perm {t}: {lab[left[-1]]} {lab[b]} {lab[right[0]]} puts a common neighbor in the middle"
                )
            elif nb:
                side[b] = "R" if right else "L"
        for a in side:
            for c in side:
                if a < c and side[a] != side[c] and g.neighbors(a) & g.neighbors(c):
                    out.append(
                        f"perm {t}: {lab[a]} and {lab[c]} share a neighbor but face opposite sides"
                    )
    return out
