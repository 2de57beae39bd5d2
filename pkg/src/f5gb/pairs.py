"""Critical pairs, S-polynomials and pair-selection strategies."""

from __future__ import annotations

import heapq
import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .arith import PowerProduct, lcm_pp
from .errors import EmptyPairSetError, ZeroOperandError
from .signatures import LabeledPolynomial, ModuleOrder, Relation, Signature

__all__ = [
    "CriticalPair",
    "make_pair",
    "spoly",
    "cmp_pair",
    "STRATEGIES",
    "PairQueue",
    "select",
]


@dataclass(frozen=True, eq=False)
class CriticalPair:
    """``(u, F, v, G)`` with ``u*F`` strictly above ``v*G`` in the labeled order.

    ``u`` and ``v`` are monomials ``(coefficient, power_product)`` chosen so
    that ``u*lm(F) = v*lm(G)`` is the monic lcm of the two leading power
    products.
    """

    u: tuple
    first: LabeledPolynomial
    v: tuple
    second: LabeledPolynomial
    lcm: PowerProduct
    key: tuple = field(repr=False)
    seq: int = field(default=0, compare=False)

    @property
    def degree(self) -> int:
        return sum(self.lcm)

    @property
    def first_sig(self) -> Signature:
        return self.first.sig.mul(self.u[1])

    @property
    def second_sig(self) -> Signature:
        return self.second.sig.mul(self.v[1])

    @property
    def nums(self) -> tuple:
        return (self.first.num, self.second.num)

    def format_multiplier(self, which: str) -> str:
        c, t = self.u if which == "u" else self.v
        ring = self.first.poly.ring
        return str(ring.monomial(c, t))

    def __repr__(self) -> str:
        return (
            f"CriticalPair([F{self.first.num}, F{self.second.num}] = "
            f"({self.format_multiplier('u')}, F{self.first.num}, "
            f"{self.format_multiplier('v')}, F{self.second.num}))"
        )


_seq = itertools.count()


def make_pair(A: LabeledPolynomial, B: LabeledPolynomial, mo: ModuleOrder) -> CriticalPair:
    if A.is_zero() or B.is_zero():
        raise ZeroOperandError("critical pairs need non-zero polynomials")
    fld = A.poly.ring.field
    la, lb = A.poly.lpp(), B.poly.lpp()
    lcm = lcm_pp(la, lb)
    ta = tuple(x - y for x, y in zip(lcm, la))
    tb = tuple(x - y for x, y in zip(lcm, lb))
    ka = mo.labeled_key(A.sig.mul(ta), A.num)
    kb = mo.labeled_key(B.sig.mul(tb), B.num)
    ua = (fld.inv(A.poly.lc()), ta)
    ub = (fld.inv(B.poly.lc()), tb)
    if ka < kb:
        A, B, ua, ub, ka, kb = B, A, ub, ua, kb, ka
    return CriticalPair(ua, A, ub, B, lcm, (ka, kb), next(_seq))


def spoly(cp: CriticalPair) -> LabeledPolynomial:
    """``u*F - v*G`` labeled with the signature of ``u*F`` and the number of ``F``."""
    (cu, tu), (cv, tv) = cp.u, cp.v
    poly = cp.first.poly.mul_term(cu, tu).sub_mul_term(cv, tv, cp.second.poly)
    return LabeledPolynomial(cp.first_sig, poly, cp.first.num)


def cmp_pair(p: CriticalPair, q: CriticalPair, mo: ModuleOrder | None = None) -> int:
    """Compare pairs by first components, then second components (-1, 0, 1).

    Pair keys are computed at construction time under the module order
    used then; ``mo`` is accepted for symmetry with the other comparators.
    """
    if p.key == q.key:
        return 0
    return 1 if p.key > q.key else -1


def component_relation(p: CriticalPair, q: CriticalPair, which: int = 0) -> Relation:
    a, b = p.key[which], q.key[which]
    if a == b:
        return Relation.BOWTIE
    return Relation.LT if a < b else Relation.GT


# ---------------------------------------------------------------------------
# selection strategies
# ---------------------------------------------------------------------------


class _Desc:
    """Inverts the ordering of a key inside a min-heap."""

    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other):
        return self.k > other.k

    def __eq__(self, other):
        return self.k == other.k


def _mindeg_maxpair(cp: CriticalPair):
    return (cp.degree, _Desc(cp.key), cp.first.num, cp.second.num, cp.seq)


def _minpair(cp: CriticalPair):
    return (cp.key, cp.first.num, cp.second.num, cp.seq)


STRATEGIES = ("mindeg-maxpair", "minpair", "fifo")


class PairQueue:
    """The pending pair set ``CP`` with deterministic selection.

    * ``mindeg-maxpair``: lowest lcm degree, then the largest pair; ties by
      smaller ``Num(F)``, ``Num(G)``, then insertion order.
    * ``minpair``: the smallest pair in the labeled pair order.
    * ``fifo``: insertion order.
    """

    def __init__(self, strategy: str = "mindeg-maxpair", pairs: Iterable[CriticalPair] = ()):
        if strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
        self.strategy = strategy
        self._counter = itertools.count()
        if strategy == "fifo":
            self._items: deque | list = deque()
        else:
            self._items = []
            self._keyfn = _mindeg_maxpair if strategy == "mindeg-maxpair" else _minpair
        for cp in pairs:
            self.push(cp)

    def push(self, cp: CriticalPair) -> None:
        if self.strategy == "fifo":
            self._items.append(cp)
        else:
            heapq.heappush(self._items, (self._keyfn(cp), next(self._counter), cp))

    def pop(self) -> CriticalPair:
        if not self._items:
            raise EmptyPairSetError("critical pair set is empty")
        if self.strategy == "fifo":
            return self._items.popleft()
        return heapq.heappop(self._items)[2]

    def __len__(self) -> int:
        return len(self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def __iter__(self):
        if self.strategy == "fifo":
            return iter(list(self._items))
        return iter(cp for _, _, cp in sorted(self._items))


def select(strategy: str, pairs: Iterable[CriticalPair]) -> CriticalPair:
    """Return the pair ``strategy`` would pick from ``pairs`` (not removed)."""
    pairs = list(pairs)
    if not pairs:
        raise EmptyPairSetError("critical pair set is empty")
    if strategy == "fifo":
        return min(pairs, key=lambda cp: cp.seq)
    return PairQueue(strategy, pairs).pop()
