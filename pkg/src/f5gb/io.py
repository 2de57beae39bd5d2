"""Reading and writing polynomial systems.

A system file has header statements followed by one polynomial per
statement.  Statements end at a newline or ``;``; ``#`` starts a comment::

    vars x, y, z
    field Q            # or GF(32003)
    order grevlex      # lex | grlex | grevlex
    y^2 + y*z - x
    y^2 - z^2 + z

Coefficients are integers or ``a/b`` rationals.  ``*`` may be omitted
between factors (``2x^2y`` is ``2*x^2*y``), but adjacent letters form one
identifier (``xy`` must be declared to be used).  The order of the
polynomial lines fixes the generator indices ``e_1 .. e_m``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import QQ, PrimeField, Polynomial, Ring, is_prime, monomial_order
from .errors import (
    FieldError,
    MalformedExponentError,
    NonPrimeModulusError,
    ParseError,
    RingError,
    UnknownIdentifierError,
    ZeroPolynomialLineError,
)

__all__ = ["parse_system", "parse_polynomial", "format_system"]

HEADER_KEYWORDS = ("vars", "field", "order")

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<num>\d+(?:\.\d*)?)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()])"
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    col: int


def _tokenize(text: str, line: int, col0: int) -> list:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col0 + pos)
        kind = m.lastgroup
        if kind != "ws":
            if kind == "num" and "." in m.group():
                raise ParseError(f"decimal number {m.group()!r} is not exact; use a/b", line, col0 + pos)
            toks.append(_Tok(kind, m.group(), col0 + pos))
        pos = m.end()
    toks.append(_Tok("end", "", col0 + len(text)))
    return toks


class _PolyParser:
    def __init__(self, text: str, ring: Ring, line: int = 1, col0: int = 1):
        self.ring = ring
        self.line = line
        self.toks = _tokenize(text, line, col0)
        self.i = 0
        self.index = {v: k for k, v in enumerate(ring.variables)}

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg: str, tok: _Tok, cls=ParseError):
        raise cls(msg, self.line, tok.col)

    def parse(self) -> Polynomial:
        p = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            self.error(f"unexpected {tok.text!r}", tok)
        return p

    def expr(self) -> Polynomial:
        sign = 1
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.take()
            sign = -1 if tok.text == "-" else 1
        p = self.term()
        if sign < 0:
            p = -p
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.take()
                q = self.term()
                p = p + q if tok.text == "+" else p - q
            else:
                return p

    def _starts_factor(self, tok: _Tok) -> bool:
        return tok.kind in ("num", "ident") or (tok.kind == "op" and tok.text == "(")

    def term(self) -> Polynomial:
        p = self.power()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.take()
                p = p * self.power()
            elif self._starts_factor(tok):
                p = p * self.power()
            else:
                return p

    def power(self) -> Polynomial:
        base = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.take()
            e = self.peek()
            if e.kind != "num":
                self.error("exponent must be a non-negative integer", e, MalformedExponentError)
            self.take()
            return base ** int(e.text)
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        if tok.kind == "num":
            value = Fraction(int(tok.text))
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text == "/":
                self.take()
                den = self.take()
                if den.kind != "num":
                    self.error("division is only allowed between integer constants", den)
                if int(den.text) == 0:
                    self.error("division by zero", den)
                value = Fraction(int(tok.text), int(den.text))
            try:
                return self.ring.constant(self.ring.field.convert(value))
            except FieldError as exc:
                self.error(str(exc), tok)
        if tok.kind == "ident":
            if tok.text not in self.index:
                self.error(f"{tok.text!r} is not a declared variable", tok, UnknownIdentifierError)
            k = self.index[tok.text]
            return self.ring.monomial(1, tuple(int(j == k) for j in range(self.ring.nvars)))
        if tok.kind == "op" and tok.text == "(":
            p = self.expr()
            close = self.take()
            if not (close.kind == "op" and close.text == ")"):
                self.error("expected ')'", close)
            return p
        if tok.kind == "end":
            self.error("unexpected end of expression", tok)
        self.error(f"unexpected {tok.text!r}", tok)


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse a single polynomial in ``ring`` (infix syntax)."""
    return _PolyParser(text, ring).parse()


def _statements(text: str):
    """Yield ``(line, column, stripped_text)`` for each non-empty statement."""
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        start = 0
        for part in line.split(";"):
            stripped = part.strip()
            if stripped:
                col = start + (len(part) - len(part.lstrip())) + 1
                yield lineno, col, stripped
            start += len(part) + 1


_FIELD_RE = re.compile(r"^(?:(?P<q>QQ?)|(?:GF|F|Z/|ZZ/)\(?\s*(?P<p>-?\d+)\s*\)?)$")


def _parse_field(text: str, line: int, col: int):
    m = _FIELD_RE.match(text.strip())
    if m is None:
        raise ParseError(f"unknown field {text!r}; expected Q or GF(p)", line, col)
    if m.group("q"):
        return QQ
    p = int(m.group("p"))
    if not is_prime(p):
        raise NonPrimeModulusError(f"{p} is not prime", line, col)
    return PrimeField(p)


def parse_system(text: str, order=None) -> tuple:
    """Parse a system file into ``(ring, [f_1, ..., f_m])``.

    ``order`` overrides the file's ``order`` statement (default grevlex).
    """
    variables = None
    fld = QQ
    file_order = "grevlex"
    body = []
    for line, col, stmt in _statements(text):
        word = stmt.split(None, 1)[0]
        if word in HEADER_KEYWORDS:
            if body:
                raise ParseError(f"header statement {word!r} after the first polynomial", line, col)
            arg = stmt[len(word):].strip()
            argcol = col + len(stmt) - len(stmt[len(word):].lstrip())
            if word == "vars":
                names = [v for v in re.split(r"[,\s]+", arg) if v]
                if not names:
                    raise ParseError("empty variable list", line, argcol)
                for v in names:
                    if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v) or v in HEADER_KEYWORDS:
                        raise ParseError(f"invalid variable name {v!r}", line, argcol)
                if len(set(names)) != len(names):
                    raise ParseError(f"duplicate variable names in {arg!r}", line, argcol)
                variables = tuple(names)
            elif word == "field":
                fld = _parse_field(arg, line, argcol)
            else:
                try:
                    file_order = monomial_order(arg).name
                except ValueError as exc:
                    raise ParseError(str(exc), line, argcol) from None
        else:
            body.append((line, col, stmt))
    if variables is None:
        raise ParseError("missing 'vars' statement", 1, 1)
    try:
        ring = Ring(variables, fld, monomial_order(order) if order is not None else monomial_order(file_order))
    except RingError as exc:
        raise ParseError(str(exc), 1, 1) from None
    if not body:
        raise ParseError("system has no polynomials", max(1, len(text.splitlines())), 1)
    polys = []
    for line, col, stmt in body:
        p = _PolyParser(stmt, ring, line, col).parse()
        if not p.terms:
            raise ZeroPolynomialLineError("polynomial is zero after normalization", line, col)
        polys.append(p)
    return ring, polys


def format_system(ring: Ring, polys: Sequence[Polynomial]) -> str:
    lines = [
        f"vars {', '.join(ring.variables)}",
        f"field {ring.field}",
        f"order {ring.order.name}",
    ]
    lines.extend(str(p) for p in polys)
    return "\n".join(lines) + "\n"
