"""Different pair-selection strategies, one answer.

The correctness of the signature criteria does not depend on which pair is
processed next.  Each strategy is run on random systems and the reduced
basis is compared with the one from classical Buchberger.

Run:  python demos/04_strategies_vs_oracle.py [count]
"""

import sys
import time

from f5gb import buchberger, corpus, is_groebner, reduced_gb, run

count = int(sys.argv[1]) if len(sys.argv) > 1 else 30
strategies = ("mindeg-maxpair", "minpair", "fifo")
mismatches = 0
selections = dict.fromkeys(strategies, 0)
elapsed = dict.fromkeys(strategies, 0.0)

for system in corpus(count):
    reference = reduced_gb(buchberger(system.polys))
    for strategy in strategies:
        t = time.perf_counter()
        res = run(system.polys, algorithm="f5b", strategy=strategy)
        elapsed[strategy] += time.perf_counter() - t
        selections[strategy] += res.stats.selections
        P = res.polynomials()
        if not is_groebner(P)[0] or reduced_gb(P) != reference:
            mismatches += 1
            print("mismatch:", system, strategy)

for strategy in strategies:
    print(f"{strategy:15s} {selections[strategy]:6d} pair selections  {elapsed[strategy]:.2f}s")
print(f"{count} systems, {mismatches} mismatches against Buchberger")
