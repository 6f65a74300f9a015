"""Brute-force checks: poset dimension and the width-two sweep.

The exact prn of a bipartite graph is the dimension of the poset that puts
each A-vertex below its B-neighbors. The oracle computes it by coloring
critical pairs. The sweep runs it on every width-two poset up to a given size
and compares against the cover-graph prediction.

Run:  python3 demos/04_oracle_sweep.py [max_n]
"""

import sys
from collections import Counter

from bipartite_prn.families import crown, crown_with_universal
from bipartite_prn.oracle import OracleBudget, bipartite_poset, dimension, sweep_width2


def main(max_n=5):
    for n in (2, 3, 4):
        t, realizer = dimension(bipartite_poset(crown(n)))
        print(f"crown({n}): dimension {t}, realizer of {len(realizer)} linear extensions")

    budget = OracleBudget(max_elements=10)
    for k in (2, 3, 4):
        t, _ = dimension(bipartite_poset(crown_with_universal(k)), budget)
        print(f"crown_with_universal({k}): prn {t}")

    report = sweep_width2(max_n)
    by_class = Counter((r.cls, r.exact_prn) for r in report.rows)
    print(f"\nwidth-two sweep up to {max_n} elements: {len(report.rows)} posets")
    for (cls, prn), count in sorted(by_class.items()):
        print(f"  {cls:18s} prn {prn}: {count}")
    print(f"mismatches: {len(report.mismatches)}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 5)
