"""Walk through F5M on two quadrics, one loop at a time.

Run:  python demos/01_toy_trace.py
"""

from pathlib import Path

from f5gb import parse_system, run

ring, polys = parse_system(Path(__file__).with_name("toy.sys").read_text())
print("input:")
for i, f in enumerate(polys, 1):
    print(f"  F{i} = (e{i}, {f}, {i})")

result = run(polys, algorithm="f5m", mode="POT", strategy="mindeg-maxpair")

print("\nmain loop:")
for ev in result.trace:
    cp = ev.pair
    head = (f"LOOP {ev.loop:2d}  [F{cp.first.num}, F{cp.second.num}] = "
            f"({cp.format_multiplier('u')}, F{cp.first.num}, {cp.format_multiplier('v')}, F{cp.second.num})")
    if ev.outcome == "rejected":
        r = ev.rejection
        print(f"{head}\n          rejected: {r.reason} criterion on the {r.side} side, witness F{r.witness.num}")
    else:
        print(f"{head}\n          new element F{ev.new.num} = {ev.new}")

print("\nfinal basis B_end:")
for Q in result.basis:
    print(f"  F{Q.num} = {Q}")
print(f"archived pairs |D_end| = {len(result.archived)}")
