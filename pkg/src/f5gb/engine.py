"""F5-reduction and the signature-based main loop (F5B / F5M, POT or TOP).

The main loop is the Buchberger-style F5 algorithm: pick a pair, drop it if
either criterion fires (archiving it in F5M mode), otherwise F5-reduce its
S-polynomial, give the result the next number and add it to the basis even
when it reduced to zero.  Zero results never form pairs and never reduce
anything, but they still witness the Rewritten criterion.
"""

from __future__ import annotations

import dataclasses
import json
import logging
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .arith import PowerProduct, Polynomial, Ring, coprime_pp
from .criteria import SYZYGY, Rejection, is_rewritable, pair_passes, syzygy_witness
from .errors import ConfigurationError, InputError, LoopLimitExceeded, RingError
from .pairs import STRATEGIES, CriticalPair, PairQueue, make_pair, spoly
from .signatures import LabeledPolynomial, ModuleOrder, Signature

log = logging.getLogger(__name__)

__all__ = [
    "EngineConfig",
    "Stats",
    "ReductionStep",
    "ReductionRecord",
    "TraceEvent",
    "RunResult",
    "RejectedPairReport",
    "f5_reduce",
    "run",
    "verify_rejected",
    "collect_stats",
]

ALGORITHMS = ("f5b", "f5m")
MODES = ("POT", "TOP")
BOUNDS = ("signature", "labeled")


@dataclass(frozen=True)
class EngineConfig:
    algorithm: str = "f5m"
    mode: str = "POT"
    strategy: str = "mindeg-maxpair"
    cond34: bool = True
    coprime_criterion: bool = False
    max_loops: int = 10**6
    record_trace: bool = True
    record_reductions: bool = False

    def __post_init__(self):
        object.__setattr__(self, "algorithm", self.algorithm.lower())
        object.__setattr__(self, "mode", self.mode.upper())
        if self.algorithm not in ALGORITHMS:
            raise ConfigurationError(f"algorithm must be one of {ALGORITHMS}, got {self.algorithm!r}")
        if self.mode not in MODES:
            raise ConfigurationError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.strategy not in STRATEGIES:
            raise ConfigurationError(f"strategy must be one of {STRATEGIES}, got {self.strategy!r}")
        if self.max_loops < 0:
            raise ConfigurationError("max_loops must be non-negative")


@dataclass
class Stats:
    """Counters named after the statistics of the Boolean-ring experiments.

    ``comparable_hits`` / ``rewritable_hits`` count every successful test,
    whether made by a criterion or by reduction conditions 3 and 4.
    """

    comparable_hits: int = 0
    rewritable_hits: int = 0
    useful_cps: int = 0
    zero_polys: int = 0
    syzygy_rejections: int = 0
    rewritten_rejections: int = 0
    selections: int = 0
    reduction_steps: int = 0

    def as_table(self) -> dict:
        return {
            "comparable": self.comparable_hits,
            "rewritable": self.rewritable_hits,
            "useful cp's": self.useful_cps,
            "0-polys": self.zero_polys,
            "syzygy_rejections": self.syzygy_rejections,
            "rewritten_rejections": self.rewritten_rejections,
        }


@dataclass(frozen=True)
class ReductionStep:
    """One step ``F -> F - c*t*G``, with the working lpp before and after."""

    coeff: object
    mult: PowerProduct
    reducer: LabeledPolynomial
    lpp_before: PowerProduct
    lpp_after: Optional[PowerProduct]


@dataclass(frozen=True)
class ReductionRecord:
    input: LabeledPolynomial
    output: LabeledPolynomial
    steps: tuple


@dataclass(frozen=True)
class TraceEvent:
    loop: int
    pair: CriticalPair
    outcome: str                     # "rejected" | "reduced" | "zero"
    rejection: Optional[Rejection] = None
    new: Optional[LabeledPolynomial] = None

    def to_record(self) -> dict:
        cp = self.pair
        rec = {
            "loop": self.loop,
            "pair": [cp.first.num, cp.second.num, cp.format_multiplier("u"), cp.format_multiplier("v")],
            "outcome": self.outcome,
        }
        if self.rejection is not None:
            rec["reason"] = self.rejection.reason
            rec["side"] = self.rejection.side
            rec["witnessNum"] = self.rejection.witness.num
        if self.new is not None:
            ring = self.new.poly.ring
            rec["newPoly"] = str(self.new.poly)
            rec["newSig"] = self.new.sig.format(ring.variables)
            rec["newNum"] = self.new.num
        return rec

    def to_json(self) -> str:
        return json.dumps(self.to_record(), ensure_ascii=False, separators=(", ", ": "))


@dataclass
class RunResult:
    ring: Ring
    config: EngineConfig
    module_order: ModuleOrder
    basis: list                       # B_end, ordered by number
    archived: list                    # D_end (empty for F5B)
    stats: Stats
    trace: list = field(default_factory=list)
    reductions: list = field(default_factory=list)

    def polynomials(self) -> list:
        """Non-zero polynomial parts of the final basis, by number."""
        return [Q.poly for Q in self.basis if Q.poly.terms]

    def trace_lines(self) -> list:
        return [ev.to_json() for ev in self.trace]


# ---------------------------------------------------------------------------
# F5-reduction
# ---------------------------------------------------------------------------


def f5_reduce(
    F: LabeledPolynomial,
    B: Sequence[LabeledPolynomial],
    mo: ModuleOrder,
    *,
    cond34: bool = True,
    bound: str = "signature",
    stats: Stats | None = None,
    steps: list | None = None,
) -> LabeledPolynomial:
    """Top-reduce ``F`` by ``B`` while keeping its signature.

    A reducer ``G`` (scanned by ascending number, first eligible wins) must
    have ``lpp(G) | lpp(F)``; with ``t = lpp(F)/lpp(G)`` the multiple ``t*G``
    must lie strictly below ``F`` and, when ``cond34`` is set, must be
    neither comparable nor rewritable by ``B``.

    ``bound="signature"`` compares signatures only (the main loop).
    ``bound="labeled"`` compares signature then number, admitting a reducer
    with equal signature but larger number; this is the bound used to check
    archived pairs against the final basis.
    """
    if bound not in BOUNDS:
        raise ConfigurationError(f"bound must be one of {BOUNDS}")
    fld = F.poly.ring.field
    sig = F.sig
    fkey = mo.labeled_key(sig, F.num) if bound == "labeled" else mo.sig_key(sig)
    reducers = [G for G in B if G.poly.terms]
    p = F.poly
    while p.terms:
        lp, lc = p.terms[0]
        for G in reducers:
            g_lpp, g_lc = G.poly.terms[0]
            if not all(x <= y for x, y in zip(g_lpp, lp)):
                continue
            t = tuple(x - y for x, y in zip(lp, g_lpp))
            gsig = Signature(tuple(a + b for a, b in zip(G.sig.pp, t)), G.sig.index)
            gkey = mo.labeled_key(gsig, G.num) if bound == "labeled" else mo.sig_key(gsig)
            if not fkey > gkey:
                continue
            if cond34:
                if syzygy_witness(t, G, B, mo) is not None:
                    if stats is not None:
                        stats.comparable_hits += 1
                    continue
                if is_rewritable(t, G, B) is not None:
                    if stats is not None:
                        stats.rewritable_hits += 1
                    continue
            c = fld.div(lc, g_lc)
            p = p.sub_mul_term(c, t, G.poly)
            if stats is not None:
                stats.reduction_steps += 1
            if steps is not None:
                steps.append(ReductionStep(c, t, G, lp, p.terms[0][0] if p.terms else None))
            break
        else:
            break
    if p is F.poly:
        return F
    return LabeledPolynomial(sig, p, F.num)


# ---------------------------------------------------------------------------
# main loop
# ---------------------------------------------------------------------------


def _validate_input(polys: Sequence[Polynomial]) -> Ring:
    if not polys:
        raise InputError("at least one generator is required")
    ring = polys[0].ring
    for i, f in enumerate(polys, 1):
        if not isinstance(f, Polynomial):
            raise InputError(f"generator {i} is not a Polynomial")
        if f.ring != ring:
            raise RingError(f"generator {i} lives in {f.ring}, expected {ring}")
        if not f.terms:
            raise InputError(f"generator {i} is the zero polynomial")
    return ring


def run(
    polys: Sequence[Polynomial],
    config: EngineConfig | None = None,
    *,
    on_reduction: Callable[[ReductionRecord], None] | None = None,
    **overrides,
) -> RunResult:
    """Compute a Gröbner basis of ``polys`` with the F5B/F5M main loop.

    ``config`` fields may also be passed as keyword overrides, e.g.
    ``run(F, algorithm="f5b", mode="TOP", strategy="fifo")``.  The monomial
    order is the ring's.  ``on_reduction`` receives a
    :class:`ReductionRecord` for every F5-reduction performed.
    """
    if config is None:
        config = EngineConfig(**overrides)
    elif overrides:
        config = dataclasses.replace(config, **overrides)
    polys = list(polys)
    ring = _validate_input(polys)
    m = len(polys)
    one = ring.one_pp
    if config.mode == "TOP":
        mo = ModuleOrder.top(ring.order, [f.lpp() for f in polys])
    else:
        mo = ModuleOrder.pot(ring.order)

    stats = Stats()
    B: list = [LabeledPolynomial(Signature(one, i), f, i) for i, f in enumerate(polys, 1)]
    D: list = []
    trace: list = []
    reductions: list = []
    k = m
    CP = PairQueue(config.strategy)
    for i in range(m):
        for j in range(i + 1, m):
            if config.coprime_criterion and coprime_pp(B[i].poly.lpp(), B[j].poly.lpp()):
                continue
            CP.push(make_pair(B[i], B[j], mo))

    archive = config.algorithm == "f5m"
    want_steps = config.record_reductions or on_reduction is not None
    loop = 0
    while CP:
        if loop >= config.max_loops:
            raise LoopLimitExceeded(config.max_loops, len(CP))
        loop += 1
        cp = CP.pop()
        stats.selections += 1
        rejection = pair_passes(cp, B, mo, stats)
        if rejection is not None:
            if rejection.reason == SYZYGY:
                stats.syzygy_rejections += 1
            else:
                stats.rewritten_rejections += 1
            if archive:
                D.append(cp)
            if config.record_trace:
                trace.append(TraceEvent(loop, cp, "rejected", rejection=rejection))
            continue

        stats.useful_cps += 1
        SP = spoly(cp)
        steps: list | None = [] if want_steps else None
        reduced = f5_reduce(SP, B, mo, cond34=config.cond34, stats=stats, steps=steps)
        P = LabeledPolynomial(reduced.sig, reduced.poly, k + 1)
        if want_steps:
            rec = ReductionRecord(SP, reduced, tuple(steps))
            if config.record_reductions:
                reductions.append(rec)
            if on_reduction is not None:
                on_reduction(rec)
        if P.poly.terms:
            for Q in B:
                if not Q.poly.terms:
                    continue
                if config.coprime_criterion and coprime_pp(P.poly.lpp(), Q.poly.lpp()):
                    continue
                CP.push(make_pair(P, Q, mo))
        else:
            stats.zero_polys += 1
        k += 1
        B.append(P)
        if config.record_trace:
            trace.append(TraceEvent(loop, cp, "reduced" if P.poly.terms else "zero", new=P))

    log.debug("run finished after %d selections, |B|=%d, |D|=%d", loop, len(B), len(D))
    return RunResult(ring, config, mo, B, D, stats, trace, reductions)


# ---------------------------------------------------------------------------
# post-run checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RejectedPairReport:
    pair: CriticalPair
    spoly: LabeledPolynomial
    remainder: LabeledPolynomial

    @property
    def reduces_to_zero(self) -> bool:
        return not self.remainder.poly.terms


def verify_rejected(
    B_end: Sequence[LabeledPolynomial] | RunResult,
    D_end: Iterable[CriticalPair] | None = None,
    mo: ModuleOrder | None = None,
) -> list:
    """F5-reduce the S-polynomial of every archived pair by the final basis.

    The reduction bound is the labeled order (signature, then number) and
    conditions 3 and 4 are not applied: a rejected pair is redundant when
    its S-polynomial has a representation strictly below it in that order.
    """
    if isinstance(B_end, RunResult):
        res = B_end
        B_end, D_end, mo = res.basis, res.archived, res.module_order
    if D_end is None or mo is None:
        raise ConfigurationError("verify_rejected needs the final basis, archived pairs and module order")
    reports = []
    for cp in D_end:
        sp = spoly(cp)
        rem = f5_reduce(sp, B_end, mo, cond34=False, bound="labeled")
        reports.append(RejectedPairReport(cp, sp, rem))
    return reports


def collect_stats(result: RunResult) -> Stats:
    return result.stats
