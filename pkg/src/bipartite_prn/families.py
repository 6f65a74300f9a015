"""Graph families: complete bipartite graphs, crowns and their variants, extended crowns.

Also the closed-form two-permutation and 2-uniform words for extended crowns of
width-two posets, and the largest-induced-crown search used as a lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import (
    InternalVerificationFailed,
    NotCycle,
    NotMaximumAntichain,
    NotType2,
    SizeLimit,
    WidthNot2,
)
from .graph import BipartiteGraph, Graph
from .poset import Poset, width_and_cover
from .words import PermSequence, is_uniform, represents

__all__ = [
    "complete_bipartite",
    "crown",
    "crown_with_pendants",
    "crown_with_universal",
    "forbidden_prn2",
    "ExtendedCrown",
    "extended_crown",
    "least_maximum_antichain",
    "classify_width2",
    "predicted_prn_width2",
    "type2_word",
    "cycle_word",
    "find_2uniform_word",
    "largest_induced_crown",
]


def complete_bipartite(m: int, n: int) -> BipartiteGraph:
    if m < 1 or n < 1:
        raise ValueError("both parts need at least one vertex")
    a = [f"a{i}" for i in range(1, m + 1)]
    b = [f"b{j}" for j in range(1, n + 1)]
    return BipartiteGraph.from_parts(a, b, [(x, y) for x in a for y in b])


def _crown_edges(k: int):
    return [(f"a{i}", f"b{j}") for i in range(1, k + 1) for j in range(1, k + 1) if i != j]


def crown(n: int) -> BipartiteGraph:
    """K_{n,n} minus the perfect matching a_i b_i."""
    if n < 2:
        raise ValueError("crown needs n >= 2")
    a = [f"a{i}" for i in range(1, n + 1)]
    b = [f"b{i}" for i in range(1, n + 1)]
    return BipartiteGraph.from_parts(a, b, _crown_edges(n))


def crown_with_pendants(
    k: int,
    pa: int,
    pb: int,
    a_hosts: Sequence[int] | None = None,
    b_hosts: Sequence[int] | None = None,
) -> BipartiteGraph:
    """Crown H_{k,k} with ``pa`` pendant vertices on A-crown vertices and ``pb`` on B-crown vertices.

    Hosts default to the lowest indices; pass 1-based ``a_hosts``/``b_hosts`` to
    pick others. A pendant on ``a_i`` lives in B and vice versa.
    """
    if k < 2 or not (0 <= pa <= k and 0 <= pb <= k):
        raise ValueError("need k >= 2 and 0 <= pa, pb <= k")
    a_hosts = list(a_hosts) if a_hosts is not None else list(range(1, pa + 1))
    b_hosts = list(b_hosts) if b_hosts is not None else list(range(1, pb + 1))
    if len(a_hosts) != pa or len(b_hosts) != pb:
        raise ValueError("host lists must match the pendant counts")
    if len(set(a_hosts)) != pa or len(set(b_hosts)) != pb:
        raise ValueError("pendants must sit on distinct hosts")
    a = [f"a{i}" for i in range(1, k + 1)]
    b = [f"b{i}" for i in range(1, k + 1)]
    edges = _crown_edges(k)
    for t, h in enumerate(b_hosts):
        name = f"a{k + 1 + t}"
        a.append(name)
        edges.append((name, f"b{h}"))
    for t, h in enumerate(a_hosts):
        name = f"b{k + 1 + t}"
        b.append(name)
        edges.append((f"a{h}", name))
    return BipartiteGraph.from_parts(a, b, edges)


def crown_with_universal(k: int) -> BipartiteGraph:
    """Crown H_{k,k} plus one vertex per side adjacent to the whole other side."""
    if k < 1:
        raise ValueError("need k >= 1")
    a = [f"a{i}" for i in range(1, k + 2)]
    b = [f"b{i}" for i in range(1, k + 2)]
    edges = _crown_edges(k)
    edges += [(f"a{k + 1}", y) for y in b]
    edges += [(x, f"b{k + 1}") for x in a[:-1]]
    return BipartiteGraph.from_parts(a, b, edges)


def forbidden_prn2() -> list[Graph]:
    """Bipartite graphs of prn 3; containing any of them as induced subgraph forces prn >= 3.

    A 4-cycle with pendants on three of its vertices, a domino (two 4-cycles
    sharing an edge) with a pendant on a shared vertex, and the claw with every
    edge subdivided.
    """
    square_pendants = Graph.from_edges(
        7, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 4), (0, 5), (2, 6)]
    ).relabeled([f"s{i}" for i in range(1, 8)])
    domino_pendant = Graph.from_edges(
        7, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 4), (4, 5), (2, 5), (1, 6)]
    ).relabeled([f"d{i}" for i in range(1, 8)])
    long_claw = Graph.from_edges(
        7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]
    ).relabeled([f"t{i}" for i in range(1, 8)])
    return [square_pendants, domino_pendant, long_claw]


# ---------------------------------------------------------------------------
# extended crowns


@dataclass(frozen=True)
class ExtendedCrown:
    base_poset: Poset
    antichain: tuple
    graph: BipartiteGraph
    prime: dict  # poset element -> id of its primed copy in B

    def vertex(self, element) -> int:
        """Id of the A-vertex standing for a poset element."""
        return self.base_poset.index(element)

    def partner(self, element) -> int:
        """B-vertex paired with ``element``: its own copy, or for crown
        vertices the copy it is joined to across the crown (width two)."""
        m = self.antichain
        if element in m and len(m) == 2:
            other = m[1] if element == m[0] else m[0]
            return self.prime[other]
        return self.prime[element]


def least_maximum_antichain(p: Poset) -> tuple:
    """Lexicographically least (by element position) antichain of maximum size."""
    w, _ = width_and_cover(p)
    for combo in combinations(range(p.n), w):
        if p.is_antichain(p.elements[i] for i in combo):
            return tuple(p.elements[i] for i in combo)
    raise AssertionError("no antichain of size equal to the width")


def extended_crown(p: Poset, antichain: Sequence | None = None) -> ExtendedCrown:
    """Crown on a maximum antichain M and its primed copy, ``v v'`` for v outside M,
    then neighborhoods pushed upward along the order until stable."""
    if antichain is None:
        antichain = least_maximum_antichain(p)
    antichain = tuple(antichain)
    w, _ = width_and_cover(p)
    if len(set(antichain)) != len(antichain) or not set(antichain) <= set(p.elements):
        raise NotMaximumAntichain("antichain must be distinct poset elements")
    if not p.is_antichain(antichain) or len(antichain) != w:
        raise NotMaximumAntichain(
            f"{[p.name_of(x) for x in antichain]} is not a maximum antichain (width {w})"
        )
    n = p.n
    a_names = list(p.names)
    b_names = [s + "'" for s in a_names]
    prime = {e: n + i for i, e in enumerate(p.elements)}
    nbrs = [set() for _ in range(n)]
    for x in antichain:
        for y in antichain:
            if x != y:
                nbrs[p.index(x)].add(prime[y])
    in_m = set(antichain)
    for e in p.elements:
        if e not in in_m:
            nbrs[p.index(e)].add(prime[e])
    changed = True
    while changed:
        changed = False
        for u, v in p.relations():
            iu, iv = p.index(u), p.index(v)
            if not nbrs[iu] <= nbrs[iv]:
                nbrs[iv] |= nbrs[iu]
                changed = True
    edges = [(i, b) for i in range(n) for b in nbrs[i]]
    g = Graph.from_edges(a_names + b_names, edges)
    bg = BipartiteGraph(g, frozenset(range(n)), frozenset(range(n, 2 * n)))
    return ExtendedCrown(p, antichain, bg, prime)


# ---------------------------------------------------------------------------
# width-two posets


def _cover_graph(p: Poset) -> Graph:
    return Graph.from_edges(p.n, [(p.index(a), p.index(b)) for a, b in p.cover_pairs()])


def classify_width2(p: Poset) -> str:
    """One of ``disconnected_cover``, ``path_type1``, ``path_type2``, ``cycle``,
    ``other_connected`` according to the shape of the cover graph."""
    w, _ = width_and_cover(p)
    if w != 2:
        raise WidthNot2(f"poset has width {w}")
    cg = _cover_graph(p)
    if not cg.is_connected():
        return "disconnected_cover"
    degrees = [cg.degree(v) for v in range(cg.n)]
    if len(cg.edges()) == cg.n - 1 and max(degrees) <= 2:
        full = (1 << p.n) - 1
        down = p.down
        if any((p.up[i] | down[i] | 1 << i) == full for i in range(p.n)):
            return "path_type1"
        return "path_type2"
    if all(d == 2 for d in degrees):
        return "cycle"
    return "other_connected"


def predicted_prn_width2(cls: str) -> int:
    """prn of the extended crown predicted from the cover-graph class."""
    return 3 if cls in ("cycle", "other_connected") else 2


def _path_order(p: Poset) -> list:
    """Elements along a width-two path cover graph, starting at a minimal endpoint."""
    cg = _cover_graph(p)
    ends = [v for v in range(cg.n) if cg.degree(v) <= 1]
    down = p.down
    start = min(ends, key=lambda v: (down[v] != 0, v))
    order, prev = [start], None
    while len(order) < p.n:
        cur = order[-1]
        nxt = [x for x in cg.neighbors(cur) if x != prev]
        prev = cur
        order.append(nxt[0])
    return [p.elements[i] for i in order]


def type2_word(p: Poset, antichain: Sequence | None = None) -> PermSequence:
    """Two permutations representing the extended crown of a type-2 path poset.

    The path is read as ``a_1 < .. < a_k > a_{k+1} < .. < a_n``; with
    ``partner`` as in :meth:`ExtendedCrown.partner`::

        p_1 = w_1 a_{k+1} a_k a_{k+1}' a_k' w_2      p_2 = w_3 w_4
        w_1 = a_n a_n' .. a_{k+2} a_{k+2}'           w_2 = a_{k-1} a_{k-1}' .. a_1 a_1'
        w_3 = a_1 .. a_k a_1' .. a_k'                w_4 = a_{k+1} .. a_n a_{k+1}' .. a_n'
    """
    if classify_width2(p) != "path_type2":
        raise NotType2("cover graph is not a type-2 path")
    seq = _path_order(p)
    k = next(t for t in range(1, len(seq)) if p.lt(seq[t], seq[t - 1]))
    a = [None] + seq  # 1-based
    n = len(seq)
    ecg = extended_crown(p, antichain)
    v, part = ecg.vertex, ecg.partner

    w1 = [x for t in range(n, k + 1, -1) for x in (v(a[t]), part(a[t]))]
    mid = [v(a[k + 1]), v(a[k]), part(a[k + 1]), part(a[k])]
    w2 = [x for t in range(k - 1, 0, -1) for x in (v(a[t]), part(a[t]))]
    w3 = [v(a[t]) for t in range(1, k + 1)] + [part(a[t]) for t in range(1, k + 1)]
    w4 = [v(a[t]) for t in range(k + 1, n + 1)] + [part(a[t]) for t in range(k + 1, n + 1)]
    perms = PermSequence((tuple(w1 + mid + w2), tuple(w3 + w4)))
    if not represents(perms.flatten(), ecg.graph.graph):
        raise InternalVerificationFailed("type-2 word does not represent the extended crown")
    return perms


def cycle_word(p: Poset, antichain: Sequence | None = None) -> tuple[int, ...]:
    """2-uniform word representing the extended crown of a width-two cycle poset.

    For a poset with least element ``a_1`` and greatest ``a_r`` the cover cycle
    splits into chains ``a_1 < .. < a_r`` and ``b_1 < .. < b_s`` (s < r), and::

        w = w_1 w_2 w_3 a_r w_4 a_1' w_5 w_6
        w_1 = a_r a_r' .. a_1 a_1'      w_2 = a_1 .. a_{r-1}      w_3 = b_1' .. b_s'
        w_4 = b_s b_s' .. b_1 b_1'      w_5 = b_1 .. b_s          w_6 = a_2' .. a_r'

    where primes go through :meth:`ExtendedCrown.partner`. Height-two cycles
    fall back to :func:`find_2uniform_word`.
    """
    w, _ = width_and_cover(p)
    if w != 2 or classify_width2(p) != "cycle":
        raise NotCycle("cover graph of the poset is not a cycle")
    ecg = extended_crown(p, antichain)
    g = ecg.graph.graph
    if p.height() == 2:
        word = find_2uniform_word(g)
        if word is None:
            raise InternalVerificationFailed("no 2-uniform word found for the height-two cycle")
        return word
    mins, maxs = p.minimal(), p.maximal()
    if len(mins) != 1 or len(maxs) != 1:
        raise NotCycle("cycle poset has no least and greatest element")
    lo, hi = mins[0], maxs[0]
    cg = _cover_graph(p)
    sides = []
    for first in sorted(cg.neighbors(p.index(lo))):
        path, prev = [first], p.index(lo)
        while path[-1] != p.index(hi):
            nxt = [x for x in cg.neighbors(path[-1]) if x != prev]
            prev = path[-1]
            path.append(nxt[0])
        sides.append([p.elements[i] for i in path[:-1]])
    sides.sort(key=len, reverse=True)
    chain_a = [lo] + sides[0] + [hi]
    chain_b = sides[1]
    v, part = ecg.vertex, ecg.partner
    r, s = len(chain_a), len(chain_b)

    w1 = [x for t in range(r - 1, -1, -1) for x in (v(chain_a[t]), part(chain_a[t]))]
    w2 = [v(chain_a[t]) for t in range(r - 1)]
    w3 = [part(chain_b[t]) for t in range(s)]
    w4 = [x for t in range(s - 1, -1, -1) for x in (v(chain_b[t]), part(chain_b[t]))]
    w5 = [v(chain_b[t]) for t in range(s)]
    w6 = [part(chain_a[t]) for t in range(1, r)]
    word = tuple(w1 + w2 + w3 + [v(hi)] + w4 + [part(lo)] + w5 + w6)
    if is_uniform(word) != 2 or not represents(word, g):
        raise InternalVerificationFailed("cycle word does not represent the extended crown")
    return word


def find_2uniform_word(g: Graph) -> tuple[int, ...] | None:
    """Search for a 2-uniform word representing ``g`` (a chord diagram whose
    crossing graph is ``g``). Exhaustive backtracking; small graphs only.

    Open letters have a forced closing order: a letter opened later crosses
    exactly the open letters that close after it opens. So a new letter must be
    adjacent to a prefix of that order, and only the head of the order may close.
    """
    n = g.n
    if n == 0:
        return ()
    nbr = [0] * n
    for u in range(n):
        for v in g.neighbors(u):
            nbr[u] |= 1 << v
    word: list[int] = []
    queue: list[int] = []  # open letters in closing order
    dead: set[tuple[int, tuple[int, ...]]] = set()
    state = {"opened": 0, "closed": 0}

    def rec() -> bool:
        if len(word) == 2 * n:
            return True
        key = (state["opened"], tuple(queue))
        if key in dead:
            return False
        opened = state["opened"]
        if queue:
            u = queue[0]
            # closing u settles it: every neighbor must be open (and queued behind u)
            if nbr[u] & ~opened == 0:
                queue.pop(0)
                state["closed"] |= 1 << u
                word.append(u)
                if rec():
                    return True
                word.pop()
                state["closed"] &= ~(1 << u)
                queue.insert(0, u)
        for u in range(n):
            if opened >> u & 1 or (not word and u != 0):
                continue
            if nbr[u] & state["closed"]:
                continue
            k = 0
            while k < len(queue) and nbr[u] >> queue[k] & 1:
                k += 1
            if any(nbr[u] >> x & 1 for x in queue[k:]):
                continue
            queue.insert(k, u)
            state["opened"] |= 1 << u
            word.append(u)
            if rec():
                return True
            word.pop()
            state["opened"] &= ~(1 << u)
            queue.pop(k)
        dead.add(key)
        return False

    # cyclic shifts of a uniform word represent the same graph, so start with 0
    return tuple(word) if rec() else None


# ---------------------------------------------------------------------------
# crown lower bound


def largest_induced_crown(g: BipartiteGraph, cap: int = 20) -> tuple[int, tuple[tuple, tuple]]:
    """Largest k with an induced H_{k,k}, with witness (a_1..a_k), (b_1..b_k).

    ``a_i`` is the unique non-neighbor of ``b_i`` among the a's. The witness is
    the least A-subset in lexicographic order, each a_i paired with its least
    admissible b.
    """
    if g.n > cap:
        raise SizeLimit(f"crown search capped at {cap} vertices, graph has {g.n}")
    part_a, part_b = sorted(g.part_a), sorted(g.part_b)
    for k in range(min(len(part_a), len(part_b)), 1, -1):
        pool_a = [x for x in part_a if g.graph.degree(x) >= k - 1]
        pool_b = [y for y in part_b if g.graph.degree(y) >= k - 1]
        for subset in combinations(pool_a, k):
            s = set(subset)
            match = {}
            for y in pool_b:
                missing = s - g.neighbors(y)
                if len(missing) == 1:
                    match.setdefault(missing.pop(), y)
            if len(match) == k:
                return k, (subset, tuple(match[x] for x in subset))
    for u, v in combinations(range(g.n), 2):
        if not g.graph.has_edge(u, v):
            return 1, ((u,), (v,))
    return 0, ((), ())
