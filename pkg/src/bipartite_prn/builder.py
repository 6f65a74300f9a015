"""Permutational representations of bipartite graphs from chain covers of neighborhood posets.

Two constructions share one block layout. For a chain cover X_1..X_k of the
neighborhood poset of one part (the *cover side*), permutation ``p_i`` lists
the other chains bottom-up, then the opposite-side vertices missed by the top
of X_i, then X_i top-down with each element followed by its exclusive
neighbors. The general mode prepends a reversing permutation ``p_0`` and
needs k+1 permutations; the zeta mode drops ``p_0`` when the cover passes
:func:`check_zeta`.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import (
    InternalVerificationFailed,
    NotReduced,
    SinglePermutation,
    SingleChain,
    ZetaViolated,
)
from .graph import BipartiteGraph, Graph, Reduction, contains_induced, disjoint_union, reduce
from .poset import ChainCover, neighborhood_poset, width_and_cover
from .words import PermSequence, decode, represents

__all__ = [
    "BuildResult",
    "ZetaCheck",
    "BoundsReport",
    "choose_side",
    "construct_general",
    "check_zeta",
    "default_cover",
    "minimum_covers",
    "find_zeta_cover",
    "construct_zeta",
    "construct_best",
    "expand_twins",
    "compose_disconnected",
    "bounds_report",
]


@dataclass(frozen=True)
class BuildResult:
    perms: PermSequence
    mode: str  # "general" | "zeta"
    side: str  # part whose neighborhood poset was covered
    chain_cover: ChainCover
    relabel_trace: dict  # opposite-side vertex -> c-index (1-based)
    kappa0: int
    p0: tuple[int, ...] | None = None  # zeta mode, only when requested

    def __len__(self):
        return len(self.perms)


@dataclass(frozen=True)
class ZetaCheck:
    ok: bool
    witness: tuple[int, int] | None = None
    single_chain: bool = False

    def __bool__(self):
        return self.ok


def _widths(g: BipartiteGraph) -> tuple[int, int]:
    return (
        width_and_cover(neighborhood_poset(g, "A"))[0],
        width_and_cover(neighborhood_poset(g, "B"))[0],
    )


def choose_side(g: BipartiteGraph) -> str:
    """Side whose neighborhood poset is narrower; ties go to A.

    An empty side (edgeless input) is never chosen.
    """
    if not g.part_a or not g.part_b:
        return "A" if g.part_a else "B"
    wa, wb = _widths(g)
    return "A" if wa <= wb else "B"


def default_cover(g: BipartiteGraph, side: str) -> ChainCover:
    """First-fit cover in least-index topological order when it is minimum,
    else the matching-based minimum cover."""
    p = neighborhood_poset(g, side)
    w, dilworth = width_and_cover(p)
    chains: list[list[int]] = []
    for i in p.topological_order():
        e = p.elements[i]
        for c in chains:
            if p.lt(c[-1], e):
                c.append(e)
                break
        else:
            chains.append([e])
    if len(chains) == w:
        return ChainCover(tuple(tuple(c) for c in chains))
    return dilworth


def _resolve_cover(g: BipartiteGraph, side: str, cover: ChainCover | None) -> ChainCover:
    if not g.part(side):
        raise ValueError(f"side {side} is empty; build on the other side")
    p = neighborhood_poset(g, side)
    if cover is None:
        return default_cover(g, side)
    cover = ChainCover(cover.chains)
    cover.validate(p)
    return cover


def _kappa0(g: BipartiteGraph) -> int:
    try:
        return min(_widths(g))
    except NotReduced:
        # kappa0 is only defined once both parts are reduced
        return -1


def _containment_order(g: BipartiteGraph, block: set[int]) -> list[int]:
    """Topological order of ``block`` by strict neighborhood containment,
    supersets first, ties broken by ascending id."""
    verts = sorted(block)
    before = {v: 0 for v in verts}
    after: dict[int, list[int]] = {v: [] for v in verts}
    for u in verts:
        for v in verts:
            if u != v and g.neighbors(v) < g.neighbors(u):
                after[u].append(v)
                before[v] += 1
    heap = [v for v in verts if before[v] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        u = heapq.heappop(heap)
        out.append(u)
        for v in after[u]:
            before[v] -= 1
            if before[v] == 0:
                heapq.heappush(heap, v)
    return out


def _chain_blocks(g: BipartiteGraph, chain: Sequence[int], others: frozenset[int]):
    """Exclusive-neighbor blocks along a chain, listed top element first.

    Yields (vertex or None, block): the first item is the set of opposite-side
    vertices outside the top element's neighborhood, then each chain element
    (top-down) with its exclusive neighbors.
    """
    top = chain[-1]
    yield None, set(others - g.neighbors(top))
    for j in range(len(chain) - 1, -1, -1):
        a = chain[j]
        below = g.neighbors(chain[j - 1]) if j > 0 else frozenset()
        yield a, set(g.neighbors(a) - below)


def _layout(g, side, cover, block_order):
    """Return (p_1 .. p_k, p_0, relabel trace)."""
    chains = cover.chains
    others = g.other(side)
    prefix = [[x for j, c in enumerate(chains) if j != i for x in c] for i in range(len(chains))]

    p1 = list(prefix[0])
    for a, block in _chain_blocks(g, chains[0], others):
        if a is not None:
            p1.append(a)
        if block_order == "containment":
            p1.extend(_containment_order(g, block))
        elif block_order == "index":
            p1.extend(sorted(block))
        else:
            raise ValueError(f"unknown block order {block_order!r}")
    c_index = {}
    for v in p1:
        if v in others:
            c_index[v] = len(c_index) + 1

    def desc(block):
        return sorted(block, key=c_index.__getitem__, reverse=True)

    perms = [tuple(p1)]
    for i in range(1, len(chains)):
        p = list(prefix[i])
        for a, block in _chain_blocks(g, chains[i], others):
            if a is not None:
                p.append(a)
            p.extend(desc(block))
        perms.append(tuple(p))
    p0 = [x for c in reversed(chains) for x in c] + desc(others)
    return perms, tuple(p0), c_index


def _verify(perms: PermSequence, g: Graph) -> None:
    verdict = represents(perms.flatten(), g)
    if not verdict:
        u, v = verdict.pair
        raise InternalVerificationFailed(
            f"construction does not represent the graph: pair ({g.labels[u]}, {g.labels[v]})"
        )


def construct_general(
    g: BipartiteGraph,
    side: str | None = None,
    cover: ChainCover | None = None,
    block_order: str = "containment",
) -> BuildResult:
    """Build ``p_0 p_1 .. p_k`` for a chain cover with k chains.

    The chosen side must be reduced. Blocks of ``p_1`` are ordered by
    neighborhood containment (``block_order="containment"``, the default) or by
    ascending id (``"index"``); any order is valid in this mode.
    """
    side = side or choose_side(g)
    cover = _resolve_cover(g, side, cover)
    perms, p0, trace = _layout(g, side, cover, block_order)
    seq = PermSequence((p0, *perms))
    _verify(seq, g.graph)
    return BuildResult(seq, "general", side, cover, trace, _kappa0(g))


def _relative_ok(nb: frozenset, nb2: frozenset, chain_sets) -> bool:
    sub = [nb & c <= nb2 & c for c in chain_sets]
    sup = [nb2 & c <= nb & c for c in chain_sets]
    return any(sub[i] and sup[j] for i in range(len(chain_sets)) for j in range(len(chain_sets)) if i != j)


def check_zeta(g: BipartiteGraph, cover: ChainCover, side: str) -> ZetaCheck:
    """Test the zeta condition of ``cover`` (a cover of ``side``) over the opposite part.

    Every pair b, b' of the opposite part needs chains X_i != X_j with
    N(b) & X_i <= N(b') & X_i and N(b') & X_j <= N(b) & X_j. Pairs are scanned
    in ascending id order; the first failing pair is the witness.
    """
    cover = ChainCover(cover.chains)
    cover.validate(neighborhood_poset(g, side))
    if len(cover) < 2:
        return ZetaCheck(False, None, single_chain=True)
    chain_sets = [frozenset(c) for c in cover.chains]
    for b, b2 in combinations(sorted(g.other(side)), 2):
        if not _relative_ok(g.neighbors(b), g.neighbors(b2), chain_sets):
            return ZetaCheck(False, (b, b2))
    return ZetaCheck(True)


def minimum_covers(g: BipartiteGraph, side: str, limit: int = 20000):
    """Minimum chain covers of the side's neighborhood poset in first-fit order.

    Elements are placed in least-index topological order; each goes on the
    first open chain it extends, else starts a new chain. Other choices are
    explored by backtracking, at most ``limit`` covers. The default cover
    comes first.
    """
    p = neighborhood_poset(g, side)
    w, _ = width_and_cover(p)
    order = [p.elements[i] for i in p.topological_order()]
    chains: list[list[int]] = []
    produced = 0

    def rec(t):
        nonlocal produced
        if produced >= limit:
            return
        if t == len(order):
            produced += 1
            yield ChainCover(tuple(tuple(c) for c in chains))
            return
        e = order[t]
        for c in chains:
            if p.lt(c[-1], e):
                c.append(e)
                yield from rec(t + 1)
                c.pop()
        if len(chains) < w:
            chains.append([e])
            yield from rec(t + 1)
            chains.pop()

    first = default_cover(g, side)
    yield first
    for cover in rec(0):
        if cover != first:
            yield cover


def find_zeta_cover(g: BipartiteGraph, side: str, limit: int = 20000) -> ChainCover | None:
    """First minimum cover (see :func:`minimum_covers`) satisfying the zeta condition."""
    for cover in minimum_covers(g, side, limit):
        if len(cover) < 2:
            return None
        if check_zeta(g, cover, side):
            return cover
    return None


def construct_zeta(
    g: BipartiteGraph,
    side: str | None = None,
    cover: ChainCover | None = None,
    with_p0: bool = False,
    block_order: str = "containment",
) -> BuildResult:
    """Build ``p_1 .. p_k`` for a cover satisfying the zeta condition.

    Without ``cover`` the first minimum cover passing the condition is used
    (:func:`find_zeta_cover`). ``with_p0`` also records the general-mode
    ``p_0`` (not part of the word). Containment block order is what the
    condition's proof relies on; ``"index"`` is accepted and still verified.
    """
    side = side or choose_side(g)
    if cover is None:
        cover = find_zeta_cover(g, side)
    cover = _resolve_cover(g, side, cover)
    check = check_zeta(g, cover, side)
    if check.single_chain:
        raise SingleChain()
    if not check:
        u, v = check.witness
        raise ZetaViolated((g.labels[u], g.labels[v]))
    perms, p0, trace = _layout(g, side, cover, block_order)
    seq = PermSequence(perms)
    _verify(seq, g.graph)
    return BuildResult(seq, "zeta", side, cover, trace, _kappa0(g), p0 if with_p0 else None)


def construct_best(g: BipartiteGraph, side: str | None = None) -> BuildResult:
    """Zeta construction on a minimum cover when it applies, general otherwise.

    With ``side=None`` both parts are tried, narrower first.
    """
    sides = [side] if side else sorted((s for s in "AB" if g.part(s)), key=lambda s: _side_width(g, s))
    best = None
    for s in sides:
        try:
            res = construct_zeta(g, s)
        except ZetaViolated:
            res = construct_general(g, s)
        if best is None or len(res) < len(best):
            best = res
    return best


def _side_width(g, s):
    return width_and_cover(neighborhood_poset(g, s))[0]


def expand_twins(result: BuildResult | PermSequence, red: Reduction) -> PermSequence:
    """Lift a representation of the reduced graph back to the original graph.

    Each reduced vertex becomes its twin block: ascending ids in the first
    permutation, descending in the second, ascending in the rest.
    """
    perms = result.perms if isinstance(result, BuildResult) else result
    if red.is_identity:
        return PermSequence(perms.perms)
    if len(perms) < 2:
        raise SinglePermutation("twins cannot be separated with a single permutation")
    out = []
    for t, p in enumerate(perms):
        word = []
        for v in p:
            block = list(red.twins[v])
            word.extend(reversed(block) if t == 1 else block)
        out.append(tuple(word))
    seq = PermSequence(out)
    _verify(seq, red.original.graph)
    return seq


def compose_disconnected(
    reps: Sequence[PermSequence], graphs: Sequence[Graph] | None = None
) -> PermSequence:
    """Combine representations of vertex-disjoint graphs into one of their union.

    Inputs with one permutation are doubled first. Representations are folded
    smallest first; for ``p_1..p_k`` and ``q_1..q_l`` (k <= l) the result is
    ``(p_1 q_1) .. (p_{k-1} q_{k-1}) (q_k p_k) (q_{k+1} p_k) .. (q_l p_k)``.
    The result is checked against the union of the decoded inputs, or of
    ``graphs`` when given (vertex ids are then offsets into the union).
    """
    if len(reps) < 2:
        raise ValueError("need at least two components")
    seen: set = set()
    for r in reps:
        if seen & r.vertices:
            raise ValueError("component vertex sets must be disjoint")
        seen |= r.vertices
    padded = [r if len(r) >= 2 else PermSequence(r.perms * 2) for r in reps]
    order = sorted(range(len(padded)), key=lambda i: len(padded[i]))
    acc = padded[order[0]]
    for i in order[1:]:
        acc = _interleave(acc, padded[i])

    if graphs is not None:
        union, _ = disjoint_union(graphs)
        _verify(acc, union)
    else:
        expected = _union_of_decoded(reps)
        got = decode(acc.flatten())
        if got != expected:
            raise InternalVerificationFailed("composed word does not represent the disjoint union")
    return acc


def _interleave(p: PermSequence, q: PermSequence) -> PermSequence:
    if len(p) > len(q):
        p, q = q, p
    k, l = len(p), len(q)
    out = [p[i] + q[i] for i in range(k - 1)]
    out.extend(q[i] + p[k - 1] for i in range(k - 1, l))
    return PermSequence(out)


def _union_of_decoded(reps: Sequence[PermSequence]) -> Graph:
    letters = sorted(v for r in reps for v in r.vertices)
    pos = {v: i for i, v in enumerate(letters)}
    edges = []
    for r in reps:
        sub = decode(r.flatten())
        verts = sorted(r.vertices)
        edges.extend((pos[verts[u]], pos[verts[v]]) for u, v in sub.edges())
    return Graph.from_edges([str(v) for v in letters], edges)


@dataclass(frozen=True)
class BoundsReport:
    kappa0: int
    w_pa: int
    w_pb: int
    alpha: int
    beta: int
    size_bound: int
    crown_lower: int | None = None
    forbidden3: bool | None = None
    zeta_side: str | None = None
    lower: int = 1
    upper: int = 1
    prn: int | None = None
    verdict: str = ""
    notes: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "kappa0": self.kappa0,
            "w_pa": self.w_pa,
            "w_pb": self.w_pb,
            "alpha": self.alpha,
            "beta": self.beta,
            "distinct_neighborhood_bound": min(self.alpha, self.beta),
            "size_bound": self.size_bound,
            "crown_lower": self.crown_lower,
            "forbidden3": self.forbidden3,
            "zeta_side": self.zeta_side,
            "lower": self.lower,
            "upper": self.upper,
            "prn": self.prn,
            "verdict": self.verdict,
            "notes": list(self.notes),
        }


def bounds_report(g: BipartiteGraph, with_crown: bool = False, cap: int = 20) -> BoundsReport:
    """Upper and lower bounds on the prn of ``g``, computed on its reduced graph."""
    from .families import forbidden_prn2, largest_induced_crown

    alpha = len({g.neighbors(a) for a in g.part_a})
    beta = len({g.neighbors(b) for b in g.part_b})
    red = reduce(g).reduced
    w_pa, w_pb = _widths(red)
    kappa0 = min(w_pa, w_pb)
    size_bound = min(len(red.part_a), len(red.part_b))
    # only K_1 and K_2 fit in one permutation; twins already need two
    complete = all(g.graph.has_edge(u, v) for u, v in combinations(range(g.n), 2))
    notes = []

    zeta_side = None
    for s, w in (("A", w_pa), ("B", w_pb)):
        if w != kappa0 or w < 2:
            continue
        if find_zeta_cover(red, s) is not None:
            zeta_side = s
            break
    upper = kappa0 if zeta_side else kappa0 + 1
    if complete:
        upper = 1
    else:
        # the distinct-neighborhood and part-size bounds only bite above the trivial 2;
        # an edgeless graph has an empty reduced side and kappa0 = 0
        upper = max(2, min(upper, max(2, min(alpha, beta)), max(2, size_bound)))
    lower = 1 if complete else 2

    crown_lower = forbidden3 = None
    if with_crown:
        crown_lower, _ = largest_induced_crown(red, cap=cap)
        forbidden3 = any(
            contains_induced(red.graph, h) is not None for h in forbidden_prn2()
        )
        lower = max(lower, crown_lower, 3 if forbidden3 else 0)

    prn = lower if lower == upper else None
    if prn is not None:
        verdict = f"prn = {prn}"
    elif crown_lower == kappa0:
        verdict = f"prn = {kappa0} or {kappa0 + 1}"
    else:
        verdict = f"{lower} <= prn <= {upper}"
    if zeta_side:
        notes.append(f"minimum cover of P_{zeta_side} satisfies zeta: {kappa0} permutations suffice")
    return BoundsReport(
        kappa0, w_pa, w_pb, alpha, beta, size_bound, crown_lower, forbidden3,
        zeta_side, lower, upper, prn, verdict, notes,
    )
