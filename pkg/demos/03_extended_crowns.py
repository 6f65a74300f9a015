"""Extended crown graphs of width-two posets.

Every poset P with a chosen maximum antichain gives a bipartite graph whose
neighborhood poset has the same width as P. For width two the cover graph of
P decides whether two permutations suffice. This script builds a few of these
graphs, classifies their posets and prints explicit witnesses.

Run:  python3 demos/03_extended_crowns.py
"""

from pathlib import Path

from bipartite_prn import represents
from bipartite_prn.families import (
    classify_width2,
    cycle_word,
    extended_crown,
    largest_induced_crown,
    predicted_prn_width2,
    type2_word,
)
from bipartite_prn.io import format_perms, format_word, load_poset
from bipartite_prn.oracle import OracleBudget, prn_exact

DATA = Path(__file__).parent / "data"


def describe(path):
    p = load_poset(str(DATA / path))
    ecg = extended_crown(p)
    covers = ", ".join(f"{p.name_of(a)}<{p.name_of(b)}" for a, b in p.cover_pairs())
    print(f"{path}: covers {covers}")
    print(f"  antichain {[p.name_of(x) for x in ecg.antichain]}, graph on {ecg.graph.n} vertices")
    return p, ecg


def main():
    p, ecg = describe("chain4.poset.json")
    k, _ = largest_induced_crown(ecg.graph)
    print(f"  largest induced crown H_{k},{k}; exact prn {prn_exact(ecg.graph)}\n")

    p, ecg = describe("type2_n4.poset.json")
    cls = classify_width2(p)
    perms = type2_word(p)
    print(f"  class {cls}, predicted prn {predicted_prn_width2(cls)}")
    print("  two permutations:", format_perms(perms, ecg.graph.labels))
    print("  verified:", bool(represents(perms.flatten(), ecg.graph.graph)))
    print()

    p, ecg = describe("cycle_r4_s3.poset.json")
    cls = classify_width2(p)
    print(f"  class {cls}, predicted prn {predicted_prn_width2(cls)}, exact {prn_exact(ecg.graph, OracleBudget(max_elements=14))}")
    w = cycle_word(p)
    print("  2-uniform word:", format_word(w, ecg.graph.labels))
    print("  verified:", bool(represents(w, ecg.graph.graph)))


if __name__ == "__main__":
    main()
