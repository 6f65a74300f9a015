"""Simple undirected graphs, bipartitions, twin reduction and induced-subgraph search.

Vertices are dense integer ids ``0..n-1``; display names live in ``Graph.labels``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import OddCycle, SizeLimit

__all__ = [
    "Graph",
    "BipartiteGraph",
    "Reduction",
    "detect_bipartition",
    "reduce",
    "contains_induced",
    "disjoint_union",
]


@dataclass(frozen=True)
class Graph:
    labels: tuple[str, ...]
    adjacency: tuple[frozenset[int], ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.labels) != len(self.adjacency):
            raise ValueError("labels and adjacency differ in length")
        if len(set(self.labels)) != len(self.labels) or any(not s for s in self.labels):
            raise ValueError("labels must be unique non-empty strings")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise ValueError(f"self-loop at {self.labels[v]}")
            for u in nbrs:
                if not 0 <= u < len(self.labels) or v not in self.adjacency[u]:
                    raise ValueError(f"adjacency is not symmetric at {self.labels[v]}")
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.labels)})

    @classmethod
    def from_edges(cls, n_or_labels: int | Sequence[str], edges: Iterable[tuple]) -> "Graph":
        """Build a graph from a vertex count (or label list) and an edge iterable.

        Edge endpoints may be integer ids or labels.
        """
        if isinstance(n_or_labels, int):
            labels = tuple(str(i) for i in range(n_or_labels))
        else:
            labels = tuple(str(s) for s in n_or_labels)
        index = {s: i for i, s in enumerate(labels)}
        adj: list[set[int]] = [set() for _ in labels]
        for u, v in edges:
            u = index[u] if isinstance(u, str) else u
            v = index[v] if isinstance(v, str) else v
            if u == v:
                raise ValueError(f"self-loop at {labels[u]}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(labels, tuple(frozenset(a) for a in adj))

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def index(self, label: str) -> int:
        return self._index[label]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [], deque([s])
            while queue:
                u = queue.popleft()
                comp.append(u)
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; new id ``i`` is ``vertices[i]``."""
        pos = {v: i for i, v in enumerate(vertices)}
        adj = tuple(
            frozenset(pos[w] for w in self.adjacency[v] if w in pos) for v in vertices
        )
        return Graph(tuple(self.labels[v] for v in vertices), adj)

    def relabeled(self, labels: Sequence[str]) -> "Graph":
        return Graph(tuple(labels), self.adjacency)


@dataclass(frozen=True)
class BipartiteGraph:
    graph: Graph
    part_a: frozenset[int]
    part_b: frozenset[int]

    def __post_init__(self):
        if self.part_a & self.part_b or (self.part_a | self.part_b) != set(range(self.graph.n)):
            raise ValueError("parts must partition the vertex set")
        for u, v in self.graph.edges():
            if (u in self.part_a) == (v in self.part_a):
                raise ValueError(
                    f"edge {self.graph.labels[u]}-{self.graph.labels[v]} does not cross the parts"
                )

    @classmethod
    def from_parts(cls, a_labels: Sequence[str], b_labels: Sequence[str], edges) -> "BipartiteGraph":
        labels = list(a_labels) + list(b_labels)
        g = Graph.from_edges(labels, edges)
        na = len(a_labels)
        return cls(g, frozenset(range(na)), frozenset(range(na, len(labels))))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def labels(self) -> tuple[str, ...]:
        return self.graph.labels

    def part(self, side: str) -> frozenset[int]:
        if side == "A":
            return self.part_a
        if side == "B":
            return self.part_b
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")

    def other(self, side: str) -> frozenset[int]:
        return self.part("B" if side == "A" else "A")

    def neighbors(self, v: int) -> frozenset[int]:
        return self.graph.adjacency[v]

    def swapped(self) -> "BipartiteGraph":
        return BipartiteGraph(self.graph, self.part_b, self.part_a)


@dataclass(frozen=True)
class Reduction:
    original: BipartiteGraph
    reduced: BipartiteGraph
    representative: tuple[int, ...]  # original vertex -> reduced vertex
    twins: tuple[tuple[int, ...], ...]  # reduced vertex -> originals, ascending

    @property
    def is_identity(self) -> bool:
        return all(len(t) == 1 for t in self.twins)


def detect_bipartition(g: Graph) -> BipartiteGraph:
    """Two-color ``g`` component by component, least vertex of each component in A.

    Raises :class:`OddCycle` carrying the vertex ids of an odd cycle.
    """
    if g.n == 0:
        raise ValueError("graph is empty")
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in sorted(g.adjacency[u]):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    raise OddCycle(_odd_cycle(parent, u, w))
    a = frozenset(v for v in range(g.n) if color[v] == 0)
    return BipartiteGraph(g, a, frozenset(range(g.n)) - a)


def _odd_cycle(parent, u, w):
    def path_to_root(x):
        out = [x]
        while parent[x] != -1:
            x = parent[x]
            out.append(x)
        return out

    pu, pw = path_to_root(u), path_to_root(w)
    common = set(pu) & set(pw)
    pu = pu[: next(i for i, x in enumerate(pu) if x in common) + 1]
    pw = pw[: next(i for i, x in enumerate(pw) if x in common)]
    return pu + pw[::-1]


def reduce(g: BipartiteGraph) -> Reduction:
    """Merge vertices with equal neighborhoods; the least id represents its class."""
    classes: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        classes.setdefault(g.neighbors(v), []).append(v)
    reps = sorted(members[0] for members in classes.values())
    new_id = {r: i for i, r in enumerate(reps)}
    representative = [0] * g.n
    twins: list[tuple[int, ...]] = [()] * len(reps)
    for members in classes.values():
        rid = new_id[members[0]]
        twins[rid] = tuple(members)
        for v in members:
            representative[v] = rid
    sub = g.graph.induced(reps)
    a = frozenset(new_id[r] for r in reps if r in g.part_a)
    reduced = BipartiteGraph(sub, a, frozenset(range(len(reps))) - a)
    return Reduction(g, reduced, tuple(representative), tuple(twins))


def contains_induced(g: Graph, h: Graph, cap: int = 24) -> dict[int, int] | None:
    """Find an induced copy of ``h`` in ``g``.

    Returns the lexicographically least injective map (h-vertex -> g-vertex, read
    in h-vertex order) witnessing ``h`` as an induced subgraph, or ``None``.
    """
    if g.n > cap:
        raise SizeLimit(f"induced-subgraph search capped at {cap} vertices, graph has {g.n}")
    if h.n > g.n:
        return None
    hdeg = [h.degree(x) for x in range(h.n)]
    candidates = [[v for v in range(g.n) if g.degree(v) >= hdeg[x]] for x in range(h.n)]
    assign: list[int] = []
    used = [False] * g.n

    def extend(x: int) -> bool:
        if x == h.n:
            return True
        for v in candidates[x]:
            if used[v]:
                continue
            if all(
                g.has_edge(assign[y], v) == h.has_edge(y, x) for y in range(x)
            ):
                assign.append(v)
                used[v] = True
                if extend(x + 1):
                    return True
                assign.pop()
                used[v] = False
        return False

    if extend(0):
        return dict(enumerate(assign))
    return None


def disjoint_union(graphs: Sequence[Graph]) -> tuple[Graph, list[list[int]]]:
    """Disjoint union and, per input, the list mapping its ids to union ids."""
    labels: list[str] = []
    edges = []
    offsets = []
    for g in graphs:
        off = len(labels)
        offsets.append(list(range(off, off + g.n)))
        labels.extend(g.labels)
        edges.extend((u + off, v + off) for u, v in g.edges())
    if len(set(labels)) != len(labels):
        raise ValueError("vertex labels of the components must be disjoint")
    return Graph.from_edges(labels, edges), offsets


def relabel_map(g: Graph, mapping: Mapping[str, str]) -> Graph:
    return g.relabeled([mapping.get(s, s) for s in g.labels])
