"""Position-over-term versus term-over-position signatures.

Under POT the generator index dominates, so the run finishes one index
before looking at the next.  Under TOP signatures are compared through
``t * lpp(f_i)`` first, the Syzygy test becomes the new-comparable
predicate, and the computation is no longer incremental.

Run:  python demos/03_top_variation.py
"""

from pathlib import Path

from f5gb import parse_system, reduced_gb, run
from f5gb.errors import LoopLimitExceeded

ring, polys = parse_system(Path(__file__).with_name("toy.sys").read_text())

for mode, strategy in (("POT", "mindeg-maxpair"), ("TOP", "minpair"), ("TOP", "mindeg-maxpair")):
    res = run(polys, algorithm="f5b", mode=mode, strategy=strategy)
    s = res.stats
    print(f"{mode} / {strategy}: {s.selections} selections, {s.useful_cps} reduced, "
          f"{s.syzygy_rejections} syzygy and {s.rewritten_rejections} rewritten rejections")
    for Q in res.basis:
        print(f"    {Q}")
    print("    reduced GB:", "; ".join(map(str, reduced_gb(res.polynomials()))))

# With the degree-first strategy the TOP loop can keep producing elements of
# ever larger signature; the loop ceiling turns that into an error.
from f5gb import corpus  # noqa: E402

system = corpus(12)[11]
print(f"\n{system}")
for strategy in ("minpair", "fifo", "mindeg-maxpair"):
    try:
        res = run(system.polys, algorithm="f5b", mode="TOP", strategy=strategy, max_loops=2000)
        print(f"  TOP / {strategy}: finished after {res.stats.selections} selections")
    except LoopLimitExceeded as exc:
        print(f"  TOP / {strategy}: {exc}")
