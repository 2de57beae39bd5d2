"""Signatures, labeled polynomials and the two module orders.

A signature ``t * e_i`` is stored as a power product plus a 1-based index.
Module orders are realized as sort keys, so comparisons reduce to tuple
comparisons:

* POT: the smaller index is the larger signature, then the monomial order.
* TOP: compare ``t * lpp(f_i)`` under the monomial order, ties broken so that
  the larger index is the smaller signature.

Labeled polynomials compare by signature first; on equal signatures the one
created *later* (larger number) is the smaller one.  Equal signature and
number is its own outcome (:attr:`Relation.BOWTIE`) because the two
polynomials need not be equal.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .arith import MonomialOrder, PowerProduct, Polynomial, divides_pp, monomial_order
from .errors import ConfigurationError, ZeroScalarError

__all__ = [
    "Signature",
    "ModuleOrder",
    "Relation",
    "LabeledPolynomial",
    "cmp_sig",
    "cmp_labeled",
    "mul_labeled",
    "sig_divides",
]


@dataclass(frozen=True, slots=True)
class Signature:
    pp: PowerProduct
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"signature index must be >= 1, got {self.index}")

    def mul(self, t: PowerProduct) -> "Signature":
        return Signature(tuple(a + b for a, b in zip(self.pp, t)), self.index)

    def format(self, variables: Sequence[str]) -> str:
        parts = []
        for name, e in zip(variables, self.pp):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        head = "*".join(parts)
        return f"{head}*e{self.index}" if head else f"e{self.index}"


class ModuleOrder:
    """Position-over-term or term-over-position extension of a monomial order."""

    __slots__ = ("kind", "base", "initial_lpps", "_key")

    def __init__(self, kind: str, base: MonomialOrder | str, initial_lpps: Sequence[PowerProduct] | None = None):
        kind = kind.upper()
        if kind not in ("POT", "TOP"):
            raise ConfigurationError(f"module order kind must be POT or TOP, got {kind!r}")
        self.kind = kind
        self.base = monomial_order(base)
        self.initial_lpps = tuple(tuple(p) for p in initial_lpps) if initial_lpps is not None else None
        if kind == "TOP":
            if not self.initial_lpps:
                raise ConfigurationError("TOP order needs the leading power products of the initial polynomials")
            self._key = self._top_key
        else:
            self._key = self._pot_key

    @classmethod
    def pot(cls, base) -> "ModuleOrder":
        return cls("POT", base)

    @classmethod
    def top(cls, base, initial_lpps: Sequence[PowerProduct]) -> "ModuleOrder":
        return cls("TOP", base, initial_lpps)

    @property
    def is_top(self) -> bool:
        return self.kind == "TOP"

    def _pot_key(self, s: Signature):
        return (-s.index, self.base.key(s.pp))

    def _top_key(self, s: Signature):
        try:
            lpp = self.initial_lpps[s.index - 1]
        except IndexError:
            raise ConfigurationError(f"signature index {s.index} exceeds the {len(self.initial_lpps)} initial polynomials")
        return (self.base.key(tuple(a + b for a, b in zip(s.pp, lpp))), -s.index)

    def sig_key(self, s: Signature):
        """Sort key: ``sig_key(a) < sig_key(b)`` iff ``a`` precedes ``b``."""
        return self._key(s)

    def labeled_key(self, sig: Signature, num: int):
        return (self._key(sig), -num)

    def __repr__(self) -> str:
        return f"ModuleOrder({self.kind!r}, {self.base.name!r})"


class Relation(enum.Enum):
    """Outcome of comparing two labeled polynomials."""

    LT = "<|"       # strictly below
    BOWTIE = "><"   # same signature and same number
    GT = "|>"       # strictly above

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class LabeledPolynomial:
    """A polynomial carrying its signature and creation number."""

    sig: Signature
    poly: Polynomial
    num: int

    def lpp(self) -> PowerProduct:
        return self.poly.lpp()

    def lc(self):
        return self.poly.lc()

    def is_zero(self) -> bool:
        return not self.poly.terms

    def format(self) -> str:
        return f"({self.sig.format(self.poly.ring.variables)}, {self.poly}, {self.num})"

    def __str__(self) -> str:
        return self.format()


def cmp_sig(a: Signature, b: Signature, mo: ModuleOrder) -> int:
    """Three-way signature comparison under ``mo`` (-1, 0, 1)."""
    if a == b:
        return 0
    return 1 if mo.sig_key(a) > mo.sig_key(b) else -1


def cmp_labeled(a: LabeledPolynomial, b: LabeledPolynomial, mo: ModuleOrder) -> Relation:
    c = cmp_sig(a.sig, b.sig, mo)
    if c == 0:
        if a.num == b.num:
            return Relation.BOWTIE
        return Relation.LT if a.num > b.num else Relation.GT
    return Relation.LT if c < 0 else Relation.GT


def mul_labeled(c, t: PowerProduct, F: LabeledPolynomial) -> LabeledPolynomial:
    """``c * x^t * F``: signature multiplied by ``t``, number unchanged."""
    fld = F.poly.ring.field
    c = fld.convert(c)
    if not c:
        raise ZeroScalarError("labeled polynomials may only be scaled by non-zero monomials")
    t = tuple(t)
    return LabeledPolynomial(F.sig.mul(t), F.poly.mul_term(c, t), F.num)


def sig_divides(a: Signature, b: Signature) -> bool:
    """True iff ``a | b``: same index and ``a.pp`` divides ``b.pp``."""
    return a.index == b.index and divides_pp(a.pp, b.pp)
