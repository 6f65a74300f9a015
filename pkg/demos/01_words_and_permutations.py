"""Words, alternation and the general construction.

A word represents a graph when two letters alternate exactly if they are
adjacent. A permutational representation is a word made of whole
permutations of the vertex set. This walk-through builds one for a small
bipartite graph, checks it, and shows what a broken word looks like.

Run:  python3 demos/01_words_and_permutations.py
"""

from pathlib import Path

from bipartite_prn import construct_general, construct_zeta, represents
from bipartite_prn.errors import ZetaViolated
from bipartite_prn.io import format_perms, load_graph

DATA = Path(__file__).parent / "data"


def main():
    g = load_graph(str(DATA / "g3.json"))
    print(f"graph g3: {g.n} vertices, {len(g.graph.edges())} edges")
    print("  A =", sorted(g.labels[v] for v in g.part_a))
    print("  B =", sorted(g.labels[v] for v in g.part_b))

    # one permutation per chain plus a leading p0
    res = construct_general(g, "A")
    chains = ["<".join(g.labels[v] for v in c) for c in res.chain_cover]
    print(f"\nchain cover of P_A: {'; '.join(chains)}  (kappa0 = {res.kappa0})")
    print("general construction:")
    for name, p in zip(("p0", "p1", "p2"), res.perms):
        print(f"  {name}: {' '.join(g.labels[v] for v in p)}")
    print("represents g3:", bool(represents(res.perms.flatten(), g.graph)))

    # the two-permutation variant needs the zeta condition, which g3 lacks
    try:
        construct_zeta(g, "A")
    except ZetaViolated as exc:
        print(f"\nzeta construction refused: {exc}")

    # dropping p0 leaves a word that no longer works
    short = res.perms.flatten()[g.n:]
    verdict = represents(short, g.graph)
    u, v = verdict.pair
    proj = " ".join(g.labels[x] for x in verdict.projection)
    kind = "adjacent" if verdict.adjacent else "non-adjacent"
    print(f"without p0: pair ({g.labels[u]}, {g.labels[v]}) is {kind} but projects to {proj}")

    wide = load_graph(str(DATA / "wide_graph.json"))
    res = construct_general(wide)
    print(f"\nwide_graph ({wide.n} vertices) needs {len(res)} permutations here:")
    print(" ", format_perms(res.perms, wide.labels))


if __name__ == "__main__":
    main()
