"""Exact multivariate polynomial arithmetic over a field.

Power products are plain tuples of non-negative exponents, one entry per
ring variable.  A :class:`Polynomial` keeps its terms as a tuple of
``(power_product, coefficient)`` pairs sorted strictly descending under the
ring's monomial order, with no zero coefficients; the zero polynomial has no
terms.  All values are immutable.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence, Union

try:  # gmpy2's mpq is a much faster drop-in for Fraction
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover
    _rational = Fraction

from .errors import (
    DimensionError,
    DivisibilityError,
    FieldError,
    LeadingTermError,
    RingError,
)

PowerProduct = tuple  # tuple[int, ...]
_RATIONAL_TYPE = type(_rational(0))

__all__ = [
    "PowerProduct",
    "RationalField",
    "PrimeField",
    "QQ",
    "GF",
    "is_prime",
    "MonomialOrder",
    "LEX",
    "GRLEX",
    "GREVLEX",
    "monomial_order",
    "Ring",
    "Polynomial",
    "cmp_pp",
    "mul_pp",
    "div_pp",
    "lcm_pp",
    "divides_pp",
    "deg_pp",
    "poly_lm",
    "poly_lpp",
    "poly_lc",
    "poly_add",
    "poly_mul_monomial",
    "normal_form",
]


# ---------------------------------------------------------------------------
# power products
# ---------------------------------------------------------------------------


def _check_dims(a: PowerProduct, b: PowerProduct) -> None:
    if len(a) != len(b):
        raise DimensionError(f"power products of length {len(a)} and {len(b)}")


def deg_pp(a: PowerProduct) -> int:
    return sum(a)


def mul_pp(a: PowerProduct, b: PowerProduct) -> PowerProduct:
    _check_dims(a, b)
    return tuple(x + y for x, y in zip(a, b))


def div_pp(a: PowerProduct, b: PowerProduct) -> PowerProduct:
    """Return ``a / b``; raises :class:`DivisibilityError` unless ``b | a``."""
    _check_dims(a, b)
    out = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in out):
        raise DivisibilityError(f"{b} does not divide {a}")
    return out


def lcm_pp(a: PowerProduct, b: PowerProduct) -> PowerProduct:
    _check_dims(a, b)
    return tuple(x if x > y else y for x, y in zip(a, b))


def divides_pp(a: PowerProduct, b: PowerProduct) -> bool:
    """True iff ``a | b`` componentwise."""
    _check_dims(a, b)
    return all(x <= y for x, y in zip(a, b))


def coprime_pp(a: PowerProduct, b: PowerProduct) -> bool:
    return not any(x and y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# coefficient fields
# ---------------------------------------------------------------------------


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


@dataclass(frozen=True)
class RationalField:
    """The field of rational numbers.

    Elements are ``gmpy2.mpq`` when gmpy2 is installed and
    :class:`fractions.Fraction` otherwise; both compare and hash equal to
    the matching ``Fraction``.
    """

    name = "Q"
    characteristic = 0

    zero = _rational(0)
    one = _rational(1)
    add = staticmethod(operator.add)
    sub = staticmethod(operator.sub)
    mul = staticmethod(operator.mul)
    neg = staticmethod(operator.neg)

    @staticmethod
    def div(a, b):
        if not b:
            raise ZeroDivisionError("division by zero in Q")
        return a / b

    @staticmethod
    def inv(a):
        if not a:
            raise ZeroDivisionError("zero has no inverse in Q")
        return 1 / a

    def convert(self, value):
        if isinstance(value, float):
            raise FieldError("floating point coefficients are not exact")
        try:
            q = Fraction(value)
        except (TypeError, ValueError) as exc:
            raise FieldError(f"cannot interpret {value!r} as a rational") from exc
        return _rational(q.numerator, q.denominator)

    @staticmethod
    def format(c) -> str:
        return str(c)

    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    """GF(p); elements are ints in ``[0, p)``."""

    p: int
    characteristic: int = dc_field(init=False, repr=False, compare=False)

    zero = 0
    one = 1

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise FieldError(f"modulus {self.p!r} is not prime")
        object.__setattr__(self, "characteristic", self.p)

    @property
    def name(self) -> str:
        return f"GF({self.p})"

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError(f"zero has no inverse in GF({self.p})")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def convert(self, value) -> int:
        if isinstance(value, bool) or isinstance(value, float):
            raise FieldError(f"cannot interpret {value!r} in GF({self.p})")
        if isinstance(value, int):
            return value % self.p
        try:
            q = Fraction(value)
        except (TypeError, ValueError) as exc:
            raise FieldError(f"cannot interpret {value!r} in GF({self.p})") from exc
        if q.denominator % self.p == 0:
            raise FieldError(f"denominator of {value} vanishes in GF({self.p})")
        return q.numerator * pow(q.denominator, -1, self.p) % self.p

    @staticmethod
    def format(c) -> str:
        return str(c)

    def __str__(self) -> str:
        return self.name


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


Field = Union[RationalField, PrimeField]


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------


def _lex_key(a):
    return a


def _grlex_key(a):
    return (sum(a), a)


def _grevlex_key(a):
    # equal degree: the power product with the smaller exponent in the last
    # variable is larger, ties passed to the next-to-last variable, etc.
    return (sum(a), tuple(-e for e in reversed(a)))


class MonomialOrder:
    """Admissible order on power products, realized as a sort key.

    ``key(a) < key(b)`` iff ``a < b`` in the order.  Variable precedence is
    the ring's variable order (first variable largest).
    """

    __slots__ = ("name", "key")

    def __init__(self, name: str, key: Callable[[PowerProduct], tuple]):
        self.name = name
        self.key = lru_cache(maxsize=1 << 16)(key)

    def compare(self, a: PowerProduct, b: PowerProduct) -> int:
        return cmp_pp(a, b, self)

    def __repr__(self) -> str:
        return f"MonomialOrder({self.name!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialOrder) and other.name == self.name

    def __hash__(self) -> int:
        return hash(self.name)

    def __reduce__(self):
        return (monomial_order, (self.name,))


LEX = MonomialOrder("lex", _lex_key)
GRLEX = MonomialOrder("grlex", _grlex_key)
GREVLEX = MonomialOrder("grevlex", _grevlex_key)
_ORDERS = {o.name: o for o in (LEX, GRLEX, GREVLEX)}


def monomial_order(name: str | MonomialOrder) -> MonomialOrder:
    if isinstance(name, MonomialOrder):
        return name
    try:
        return _ORDERS[name.lower()]
    except KeyError:
        raise ValueError(f"unknown monomial order {name!r}; expected one of {sorted(_ORDERS)}")


def cmp_pp(a: PowerProduct, b: PowerProduct, order: MonomialOrder) -> int:
    """Three-way comparison: -1 if ``a < b``, 0 if equal, 1 if ``a > b``."""
    _check_dims(a, b)
    if a == b:
        return 0
    return 1 if order.key(a) > order.key(b) else -1


# ---------------------------------------------------------------------------
# rings and polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ring:
    """K[x_1, ..., x_n] together with the active monomial order."""

    variables: tuple
    field: Field = QQ
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        variables = tuple(self.variables)
        if not variables:
            raise RingError("a ring needs at least one variable")
        for v in variables:
            if not isinstance(v, str) or not v:
                raise RingError(f"invalid variable name {v!r}")
        if len(set(variables)) != len(variables):
            raise RingError(f"duplicate variable names in {variables}")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "order", monomial_order(self.order))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def one_pp(self) -> PowerProduct:
        return (0,) * len(self.variables)

    def with_order(self, order) -> "Ring":
        return Ring(self.variables, self.field, monomial_order(order))

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {self.one_pp: c})

    def monomial(self, c, pp: Sequence[int]) -> "Polynomial":
        pp = tuple(pp)
        if len(pp) != self.nvars:
            raise DimensionError(f"expected {self.nvars} exponents, got {len(pp)}")
        return Polynomial(self, {pp: c})

    def gens(self) -> tuple:
        n = self.nvars
        return tuple(
            self.monomial(1, tuple(int(i == j) for j in range(n))) for i in range(n)
        )

    def parse(self, text: str) -> "Polynomial":
        from .io import parse_polynomial

        return parse_polynomial(text, self)

    def format_pp(self, pp: PowerProduct) -> str:
        parts = []
        for name, e in zip(self.variables, pp):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        return f"{self.field}[{','.join(self.variables)}] ({self.order.name})"


class Polynomial:
    """Immutable sparse polynomial with terms sorted descending."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping | Iterable = ()):
        fld = ring.field
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        n = ring.nvars
        for pp, c in items:
            pp = tuple(pp)
            if len(pp) != n:
                raise DimensionError(f"expected {n} exponents, got {len(pp)}")
            if any(e < 0 for e in pp):
                raise ValueError(f"negative exponent in {pp}")
            c = fld.convert(c)
            acc[pp] = fld.add(acc[pp], c) if pp in acc else c
        key = ring.order.key
        self.ring = ring
        self.terms = tuple(
            sorted(((pp, c) for pp, c in acc.items() if c), key=lambda t: key(t[0]), reverse=True)
        )
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: tuple) -> "Polynomial":
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        obj._hash = None
        return obj

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def lpp(self) -> PowerProduct:
        if not self.terms:
            raise LeadingTermError("the zero polynomial has no leading power product")
        return self.terms[0][0]

    def lc(self):
        if not self.terms:
            raise LeadingTermError("the zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def lm(self) -> tuple:
        """Leading monomial as ``(coefficient, power_product)``."""
        if not self.terms:
            raise LeadingTermError("the zero polynomial has no leading monomial")
        pp, c = self.terms[0]
        return c, pp

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(pp) for pp, _ in self.terms)

    def coefficient(self, pp: Sequence[int]):
        pp = tuple(pp)
        for q, c in self.terms:
            if q == pp:
                return c
        return self.ring.field.zero

    def to_dict(self) -> dict:
        return dict(self.terms)

    # -- arithmetic -------------------------------------------------------

    def _check_ring(self, other: "Polynomial") -> None:
        if other.ring != self.ring:
            raise RingError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check_ring(other)
            return other
        return self.ring.constant(other)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        return Polynomial._raw(self.ring, _merge(self.ring, self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        neg = self.ring.field.neg
        return Polynomial._raw(self.ring, tuple((pp, neg(c)) for pp, c in self.terms))

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        return self.sub_mul_term(self.ring.field.one, self.ring.one_pp, other)

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(self.ring.field.convert(other))
        self._check_ring(other)
        fld = self.ring.field
        acc: dict = {}
        for pa, ca in self.terms:
            for pb, cb in other.terms:
                pp = tuple(x + y for x, y in zip(pa, pb))
                c = fld.mul(ca, cb)
                acc[pp] = fld.add(acc[pp], c) if pp in acc else c
        key = self.ring.order.key
        terms = tuple(
            sorted(((pp, c) for pp, c in acc.items() if c), key=lambda t: key(t[0]), reverse=True)
        )
        return Polynomial._raw(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c) -> "Polynomial":
        if not c:
            return self.ring.zero()
        mul = self.ring.field.mul
        return Polynomial._raw(self.ring, tuple((pp, mul(c, a)) for pp, a in self.terms))

    def mul_term(self, c, t: PowerProduct) -> "Polynomial":
        """Return ``c * t * self``; multiplication by a monomial keeps the term order."""
        if len(t) != self.ring.nvars:
            raise DimensionError(f"expected {self.ring.nvars} exponents, got {len(t)}")
        if not c:
            return self.ring.zero()
        mul = self.ring.field.mul
        return Polynomial._raw(
            self.ring,
            tuple((tuple(x + y for x, y in zip(pp, t)), mul(c, a)) for pp, a in self.terms),
        )

    def sub_mul_term(self, c, t: PowerProduct, g: "Polynomial") -> "Polynomial":
        """Return ``self - c * t * g`` by a single merge pass."""
        self._check_ring(g)
        if not c or not g.terms:
            return self
        fld = self.ring.field
        nc = fld.neg(c)
        mul = fld.mul
        if any(t):
            shifted = tuple((tuple(x + y for x, y in zip(pp, t)), mul(nc, a)) for pp, a in g.terms)
        else:
            shifted = tuple((pp, mul(nc, a)) for pp, a in g.terms)
        return Polynomial._raw(self.ring, _merge(self.ring, self.terms, shifted))

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc()))

    def normal_form(self, divisors: Iterable["Polynomial"]) -> "Polynomial":
        return normal_form(self, divisors)

    # -- comparison / display --------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction, _RATIONAL_TYPE)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring.variables, self.terms))
        return self._hash

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        fmt = self.ring.field.format
        pieces = []
        for pp, c in self.terms:
            cs = fmt(c)
            if not any(pp):
                s = cs
            else:
                mono = self.ring.format_pp(pp)
                if cs == "1":
                    s = mono
                elif cs == "-1":
                    s = "-" + mono
                else:
                    s = f"{cs}*{mono}"
            if not pieces:
                pieces.append(s)
            elif s.startswith("-"):
                pieces.append(" - " + s[1:])
            else:
                pieces.append(" + " + s)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def _merge(ring: Ring, a: tuple, b: tuple) -> tuple:
    """Sum of two canonical descending term tuples."""
    if not a:
        return b
    if not b:
        return a
    key = ring.order.key
    add = ring.field.add
    out = []
    append = out.append
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        pa, ca = a[i]
        pb, cb = b[j]
        if pa == pb:
            c = add(ca, cb)
            if c:
                append((pa, c))
            i += 1
            j += 1
        elif key(pa) > key(pb):
            append(a[i])
            i += 1
        else:
            append(b[j])
            j += 1
    if i < la:
        out.extend(a[i:])
    if j < lb:
        out.extend(b[j:])
    return tuple(out)


# ---------------------------------------------------------------------------
# functional surface
# ---------------------------------------------------------------------------


def poly_lm(f: Polynomial) -> tuple:
    return f.lm()


def poly_lpp(f: Polynomial) -> PowerProduct:
    return f.lpp()


def poly_lc(f: Polynomial):
    return f.lc()


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    if not isinstance(g, Polynomial) or g.ring != f.ring:
        raise RingError("poly_add operands must share a ring")
    return f + g


def poly_mul_monomial(c, t: PowerProduct, f: Polynomial) -> Polynomial:
    return f.mul_term(f.ring.field.convert(c), tuple(t))


def normal_form(f: Polynomial, divisors: Iterable[Polynomial]) -> Polynomial:
    """Full classical reduction of ``f`` modulo ``divisors``.

    The result has no term divisible by the leading power product of any
    non-zero divisor.  Divisors are tried in the given order.
    """
    ring = f.ring
    divs = []
    for g in divisors:
        f._check_ring(g)
        if g.terms:
            divs.append((g.terms[0][0], g))
    if not divs:
        return f
    fld = ring.field
    remainder: list = []
    p = f
    while p.terms:
        lp, lc = p.terms[0]
        for lg, g in divs:
            if all(x <= y for x, y in zip(lg, lp)):
                t = tuple(x - y for x, y in zip(lp, lg))
                p = p.sub_mul_term(fld.div(lc, g.terms[0][1]), t, g)
                break
        else:
            remainder.append(p.terms[0])
            p = Polynomial._raw(ring, p.terms[1:])
    return Polynomial._raw(ring, tuple(remainder))
