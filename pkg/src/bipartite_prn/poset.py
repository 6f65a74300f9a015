"""Finite posets, neighborhood posets, minimum chain covers and dimension bounds."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import InvalidCover, NotReduced
from .graph import BipartiteGraph
from .matching import hopcroft_karp

__all__ = [
    "Poset",
    "ChainCover",
    "Realizer",
    "DimensionBounds",
    "neighborhood_poset",
    "width_and_cover",
    "dimension_bounds",
    "is_realizer",
    "linear_extensions",
]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Poset:
    """Strict partial order stored as transitively closed up-set bitmasks.

    ``up[i]`` has bit ``j`` set iff ``elements[i] < elements[j]``.
    """

    elements: tuple
    up: tuple[int, ...]
    names: tuple[str, ...] = ()
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        n = len(self.elements)
        if len(self.up) != n:
            raise ValueError("one up-set per element required")
        if not self.names:
            object.__setattr__(self, "names", tuple(str(e) for e in self.elements))
        index = {e: i for i, e in enumerate(self.elements)}
        if len(index) != n:
            raise ValueError("duplicate elements")
        object.__setattr__(self, "_index", index)
        for i, m in enumerate(self.up):
            if m >> i & 1:
                raise ValueError(f"relation is not irreflexive at {self.names[i]}")
            for j in _bits(m):
                if self.up[j] & ~m:
                    raise ValueError("relation is not transitively closed")

    # construction -----------------------------------------------------------

    @classmethod
    def from_relations(
        cls,
        elements: Sequence[Hashable],
        pairs: Iterable[tuple],
        names: Sequence[str] | None = None,
    ) -> "Poset":
        """Poset generated by ``pairs`` (a, b) meaning a < b; closes transitively."""
        elements = tuple(elements)
        index = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        up = [0] * n
        for a, b in pairs:
            up[index[a]] |= 1 << index[b]
        # Warshall over bitmasks
        for k in range(n):
            bit = 1 << k
            for i in range(n):
                if up[i] & bit:
                    up[i] |= up[k]
        for i in range(n):
            if up[i] >> i & 1:
                raise ValueError("relations contain a cycle")
        return cls(elements, tuple(up), tuple(names) if names else ())

    from_covers = from_relations

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls.from_relations(range(n), [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls(tuple(range(n)), (0,) * n)

    # queries ----------------------------------------------------------------

    def __len__(self):
        return len(self.elements)

    @property
    def n(self) -> int:
        return len(self.elements)

    def index(self, e) -> int:
        return self._index[e]

    def lt(self, a, b) -> bool:
        return bool(self.up[self._index[a]] >> self._index[b] & 1)

    def comparable(self, a, b) -> bool:
        return a == b or self.lt(a, b) or self.lt(b, a)

    @property
    def down(self) -> tuple[int, ...]:
        down = [0] * self.n
        for i, m in enumerate(self.up):
            for j in _bits(m):
                down[j] |= 1 << i
        return tuple(down)

    def relations(self) -> list[tuple]:
        e = self.elements
        return [(e[i], e[j]) for i in range(self.n) for j in _bits(self.up[i])]

    def cover_pairs(self) -> list[tuple]:
        """Pairs (a, b) with b covering a."""
        e = self.elements
        out = []
        for i in range(self.n):
            m = self.up[i]
            above_above = 0
            for j in _bits(m):
                above_above |= self.up[j]
            out.extend((e[i], e[j]) for j in _bits(m & ~above_above))
        return out

    def is_chain(self) -> bool:
        return all(
            self.up[i] >> j & 1 or self.up[j] >> i & 1
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def is_antichain(self, subset: Iterable | None = None) -> bool:
        idx = range(self.n) if subset is None else [self._index[x] for x in subset]
        mask = 0
        for i in idx:
            mask |= 1 << i
        return all(not self.up[i] & mask for i in idx)

    def height(self) -> int:
        longest = [1] * self.n
        for i in self.topological_order():
            for j in _bits(self.up[i]):
                longest[j] = max(longest[j], longest[i] + 1)
        return max(longest, default=0)

    def topological_order(self) -> list[int]:
        """Indices in a linear extension (least available index first)."""
        indeg = [0] * self.n
        for i in range(self.n):
            for j in _bits(self.up[i]):
                indeg[j] += 1
        heap = [i for i in range(self.n) if indeg[i] == 0]
        heapq.heapify(heap)
        out = []
        while heap:
            i = heapq.heappop(heap)
            out.append(i)
            for j in _bits(self.up[i]):
                indeg[j] -= 1
                if indeg[j] == 0:
                    heapq.heappush(heap, j)
        return out

    def minimal(self) -> list:
        down = self.down
        return [self.elements[i] for i in range(self.n) if not down[i]]

    def maximal(self) -> list:
        return [self.elements[i] for i in range(self.n) if not self.up[i]]

    def dual(self) -> "Poset":
        return Poset(self.elements, self.down, self.names)

    def name_of(self, e) -> str:
        return self.names[self._index[e]]


@dataclass(frozen=True)
class ChainCover:
    chains: tuple[tuple, ...]

    def __post_init__(self):
        object.__setattr__(self, "chains", tuple(tuple(c) for c in self.chains))

    def __len__(self):
        return len(self.chains)

    def __iter__(self):
        return iter(self.chains)

    def validate(self, p: Poset) -> None:
        seen = [x for c in self.chains for x in c]
        if len(seen) != len(set(seen)) or set(seen) != set(p.elements):
            raise InvalidCover("chains must be disjoint and cover the poset")
        for c in self.chains:
            if not c:
                raise InvalidCover("empty chain")
            for a, b in zip(c, c[1:]):
                if not p.lt(a, b):
                    raise InvalidCover(f"{p.name_of(a)} < {p.name_of(b)} does not hold")


@dataclass(frozen=True)
class Realizer:
    linexts: tuple[tuple, ...]

    def __post_init__(self):
        object.__setattr__(self, "linexts", tuple(tuple(x) for x in self.linexts))

    def __len__(self):
        return len(self.linexts)


def neighborhood_poset(g: BipartiteGraph, side: str) -> Poset:
    """Poset on one part ordered by strict containment of neighborhoods."""
    verts = sorted(g.part(side))
    nbr = [g.neighbors(v) for v in verts]
    up = [0] * len(verts)
    for i, ni in enumerate(nbr):
        for j, nj in enumerate(nbr):
            if i == j:
                continue
            if ni == nj:
                u, v = sorted((verts[i], verts[j]))
                raise NotReduced(g.labels[u], g.labels[v])
            if ni < nj:
                up[i] |= 1 << j
    return Poset(tuple(verts), tuple(up), tuple(g.labels[v] for v in verts))


def width_and_cover(p: Poset) -> tuple[int, ChainCover]:
    """Width and a minimum chain cover via maximum matching on the split graph."""
    n = p.n
    adj = [list(_bits(p.up[i])) for i in range(n)]
    succ = hopcroft_karp(adj, n)
    has_pred = [False] * n
    for j in succ:
        if j != -1:
            has_pred[j] = True
    chains = []
    for i in range(n):
        if has_pred[i]:
            continue
        chain = [i]
        while succ[chain[-1]] != -1:
            chain.append(succ[chain[-1]])
        chains.append(tuple(p.elements[x] for x in chain))
    return len(chains), ChainCover(tuple(chains))


@dataclass(frozen=True)
class DimensionBounds:
    n: int
    width: int
    n_minus_width: int
    half: int | None  # floor(n/2), only for n >= 4
    upper: int
    note: str


def dimension_bounds(p: Poset) -> DimensionBounds:
    if p.n < 1:
        raise ValueError("poset must be nonempty")
    w, _ = width_and_cover(p)
    n = p.n
    half = n // 2 if n >= 4 else None
    if w == 1:
        return DimensionBounds(n, w, n - w, half, 1, "chain: dimension 1")
    if w == n:
        return DimensionBounds(n, w, 0, half, 2, "antichain: dimension exactly 2")
    # the complement-of-antichain bound is only meaningful above 2
    upper = min(w, max(2, n - w))
    if half is not None:
        upper = min(upper, half)
    note = "n < 4: floor(n/2) bound inapplicable" if half is None else ""
    return DimensionBounds(n, w, n - w, half, max(upper, 1), note)


def is_realizer(p: Poset, r: Realizer) -> bool:
    if not r.linexts:
        return False
    full = (1 << p.n) - 1
    inter = [full & ~(1 << i) for i in range(p.n)]
    for ext in r.linexts:
        if len(ext) != p.n or set(ext) != set(p.elements):
            return False
        pos = {p.index(e): k for k, e in enumerate(ext)}
        order = sorted(range(p.n), key=pos.__getitem__)
        after = 0
        for i in reversed(order):
            if p.up[i] & ~after:
                return False
            inter[i] &= after
            after |= 1 << i
    return tuple(inter) == p.up


def linear_extensions(p: Poset) -> Iterator[tuple]:
    """All linear extensions, by backtracking over the current minimal elements."""
    down = list(p.down)
    n = p.n
    placed = 0
    current: list[int] = []

    def rec():
        nonlocal placed
        if len(current) == n:
            yield tuple(p.elements[i] for i in current)
            return
        for i in range(n):
            if not placed >> i & 1 and down[i] & ~placed == 0:
                placed |= 1 << i
                current.append(i)
                yield from rec()
                current.pop()
                placed &= ~(1 << i)

    yield from rec()
