"""How often each criterion fires.

Counts are gathered per run: hits of the comparable and rewritable tests
(inside the criteria and inside F5-reduction), pairs that survived both
criteria, and reductions that ended at zero.  Dropping reduction
conditions 3 and 4 shows how much work they save.

Run:  python demos/05_statistics.py [count]
"""

import sys

from f5gb import corpus, run

count = int(sys.argv[1]) if len(sys.argv) > 1 else 20
header = f"{'seed':>4} {'field':>10} {'cond34':>6} {'comparable':>10} {'rewritable':>10} {'useful':>6} {'0-polys':>7}"
print(header)
print("-" * len(header))
for system in corpus(count):
    for cond34 in (True, False):
        s = run(system.polys, algorithm="f5m", cond34=cond34).stats
        print(f"{system.seed:4d} {str(system.ring.field):>10} {str(cond34):>6} "
              f"{s.comparable_hits:10d} {s.rewritable_hits:10d} {s.useful_cps:6d} {s.zero_polys:7d}")
