"""Command-line front end: ``f5gb SYSTEM [options]``.

Exit status: 0 success, 2 usage or input error, 3 loop ceiling reached,
4 an archived pair failed to reduce to zero under ``--verify-rejected``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .engine import EngineConfig, run, verify_rejected
from .errors import F5Error, LoopLimitExceeded
from .io import parse_system
from .oracle import buchberger, reduced_gb
from .pairs import STRATEGIES

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_LOOP_LIMIT = 3
EXIT_VERIFY = 4

ALGORITHMS = ("buchberger", "f5b", "f5m", "f5top")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="f5gb",
        description="Compute a Gröbner basis with a signature-based (F5B/F5M/TOP) or classical engine.",
    )
    ap.add_argument("system", help="system file ('-' reads standard input)")
    ap.add_argument("--algorithm", choices=ALGORITHMS, default="f5m")
    ap.add_argument("--order", choices=("lex", "grlex", "grevlex"), default=None,
                    help="monomial order (overrides the file's 'order' statement)")
    ap.add_argument("--strategy", choices=STRATEGIES, default="mindeg-maxpair")
    ap.add_argument("--reduce-output", action="store_true",
                    help="print the monic reduced Gröbner basis")
    ap.add_argument("--trace", metavar="PATH", help="write one JSON record per loop to PATH")
    ap.add_argument("--verify-rejected", action="store_true",
                    help="check that every archived pair reduces to zero by the final basis (f5m only)")
    ap.add_argument("--stats", action="store_true", help="print criterion statistics")
    ap.add_argument("--no-cond34", action="store_true",
                    help="drop the comparable/rewritable conditions from F5-reduction")
    ap.add_argument("--max-loops", type=int, default=10**6, metavar="N",
                    help="abort after N pair selections (default: %(default)s)")
    return ap


def _check_conflicts(ap: argparse.ArgumentParser, args) -> None:
    if args.verify_rejected and args.algorithm != "f5m":
        ap.error("--verify-rejected requires --algorithm f5m")
    if args.algorithm == "buchberger":
        for flag, on in (("--trace", args.trace), ("--stats", args.stats), ("--no-cond34", args.no_cond34)):
            if on:
                ap.error(f"{flag} is not available with --algorithm buchberger")
    if args.max_loops < 0:
        ap.error("--max-loops must be non-negative")


def main(argv=None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    ap = build_parser()
    args = ap.parse_args(argv)
    _check_conflicts(ap, args)

    try:
        if args.system == "-":
            text = sys.stdin.read()
            source = "<stdin>"
        else:
            text = Path(args.system).read_text()
            source = args.system
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT

    try:
        ring, polys = parse_system(text, order=args.order)
    except F5Error as exc:
        print(f"error: {source}:{exc}", file=err)
        return EXIT_INPUT

    result = None
    if args.algorithm == "buchberger":
        basis = buchberger(polys)
    else:
        config = EngineConfig(
            algorithm="f5m" if args.algorithm == "f5m" else "f5b",
            mode="TOP" if args.algorithm == "f5top" else "POT",
            strategy=args.strategy,
            cond34=not args.no_cond34,
            max_loops=args.max_loops,
            record_trace=bool(args.trace),
        )
        try:
            result = run(polys, config)
        except LoopLimitExceeded as exc:
            print(f"error: {exc}", file=err)
            return EXIT_LOOP_LIMIT
        basis = result.polynomials()

    if args.reduce_output:
        basis = reduced_gb(basis)
    for p in basis:
        print(p, file=out)

    if result is not None and args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            for line in result.trace_lines():
                fh.write(line + "\n")

    if result is not None and args.stats:
        print("", file=out)
        for key, value in result.stats.as_table().items():
            print(f"{key}={value}", file=out)

    status = EXIT_OK
    if args.verify_rejected:
        reports = verify_rejected(result)
        ok = sum(r.reduces_to_zero for r in reports)
        print("", file=out)
        for r in reports:
            cp = r.pair
            verdict = "0" if r.reduces_to_zero else f"NONZERO {r.remainder.poly}"
            print(f"[F{cp.first.num}, F{cp.second.num}] "
                  f"({cp.format_multiplier('u')}, F{cp.first.num}, {cp.format_multiplier('v')}, F{cp.second.num})"
                  f" -> {verdict}", file=out)
        print(f"{ok}/{len(reports)} pairs reduce to 0", file=out)
        if ok != len(reports):
            print(f"error: {len(reports) - ok} archived pair(s) did not reduce to 0 by the final basis",
                  file=err)
            status = EXIT_VERIFY
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
