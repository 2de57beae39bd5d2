"""Syzygy and Rewritten criteria.

Every predicate takes a multiplier power product ``t`` and a labeled
polynomial ``F`` and tests the labeled multiple ``t*F`` (the coefficient of
the multiplier never matters).  Basis sets are scanned in ascending number
order and the first witness found is returned, so results are deterministic.

Basis sets are sequences of :class:`LabeledPolynomial` sorted by number, as
kept by the engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .arith import PowerProduct
from .pairs import CriticalPair
from .signatures import LabeledPolynomial, ModuleOrder, Signature

__all__ = [
    "is_comparable",
    "is_new_comparable",
    "is_rewritable",
    "syzygy_witness",
    "Rejection",
    "pair_passes",
    "SYZYGY",
    "REWRITTEN",
]

SYZYGY = "syzygy"
REWRITTEN = "rewritten"


def is_comparable(t: PowerProduct, F: LabeledPolynomial, B: Sequence[LabeledPolynomial]) -> Optional[LabeledPolynomial]:
    """Witness ``G`` with ``lpp(G) | t*Sign(F).pp`` and a strictly later index."""
    s = tuple(a + b for a, b in zip(t, F.sig.pp))
    i = F.sig.index
    for G in B:
        if G.sig.index > i and G.poly.terms:
            g = G.poly.terms[0][0]
            if all(x <= y for x, y in zip(g, s)):
                return G
    return None


def is_rewritable(t: PowerProduct, F: LabeledPolynomial, B: Sequence[LabeledPolynomial]) -> Optional[LabeledPolynomial]:
    """Witness ``G`` created after ``F`` whose signature divides ``t*Sign(F)``.

    Elements whose polynomial reduced to zero are valid witnesses.
    """
    s = tuple(a + b for a, b in zip(t, F.sig.pp))
    i = F.sig.index
    n = F.num
    for G in B:
        if G.num > n and G.sig.index == i and all(x <= y for x, y in zip(G.sig.pp, s)):
            return G
    return None


def is_new_comparable(
    t: PowerProduct, F: LabeledPolynomial, B: Sequence[LabeledPolynomial], mo: ModuleOrder
) -> Optional[LabeledPolynomial]:
    """Syzygy test for the term-over-position order.

    ``G`` witnesses when ``lpp(G) | s`` with ``s = t*Sign(F).pp`` and
    ``t*F`` is strictly above ``lam*lpp(f_i)*G`` (``lam = s / lpp(G)``,
    ``i`` the index of ``F``) in the labeled TOP order.
    """
    s = tuple(a + b for a, b in zip(t, F.sig.pp))
    i = F.sig.index
    lpp_i = mo.initial_lpps[i - 1]
    lhs = mo.labeled_key(Signature(s, i), F.num)
    for G in B:
        if not G.poly.terms:
            continue
        g = G.poly.terms[0][0]
        if not all(x <= y for x, y in zip(g, s)):
            continue
        mult = tuple(a - b + c + d for a, b, c, d in zip(s, g, lpp_i, G.sig.pp))
        if lhs > mo.labeled_key(Signature(mult, G.sig.index), G.num):
            return G
    return None


def syzygy_witness(
    t: PowerProduct, F: LabeledPolynomial, B: Sequence[LabeledPolynomial], mo: ModuleOrder
) -> Optional[LabeledPolynomial]:
    """The Syzygy test appropriate to ``mo`` (comparable or new-comparable)."""
    if mo.is_top:
        return is_new_comparable(t, F, B, mo)
    return is_comparable(t, F, B)


@dataclass(frozen=True)
class Rejection:
    reason: str           # SYZYGY or REWRITTEN
    side: str             # "first" or "second"
    witness: LabeledPolynomial


def pair_passes(cp: CriticalPair, B: Sequence[LabeledPolynomial], mo: ModuleOrder, stats=None) -> Optional[Rejection]:
    """Apply both criteria to both halves of ``cp``.

    Returns ``None`` when the pair passes, otherwise the first hit in the
    fixed order: Syzygy on ``u*F``, Syzygy on ``v*G``, Rewritten on ``u*F``,
    Rewritten on ``v*G``.  ``stats`` (optional) gets its hit counters bumped.
    """
    sides = (("first", cp.u[1], cp.first), ("second", cp.v[1], cp.second))
    for side, t, F in sides:
        w = syzygy_witness(t, F, B, mo)
        if w is not None:
            if stats is not None:
                stats.comparable_hits += 1
            return Rejection(SYZYGY, side, w)
    for side, t, F in sides:
        w = is_rewritable(t, F, B)
        if w is not None:
            if stats is not None:
                stats.rewritable_hits += 1
            return Rejection(REWRITTEN, side, w)
    return None
