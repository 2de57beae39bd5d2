from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from f5gb.arith import GF, LEX, QQ
from f5gb.corpus import random_system
from f5gb.errors import (
    MalformedExponentError,
    NonPrimeModulusError,
    ParseError,
    UnknownIdentifierError,
    ZeroPolynomialLineError,
)
from f5gb.io import format_system, parse_polynomial, parse_system

TOY = """\
# the worked example
vars x, y, z
y^2 + y*z - x
y^2 - z^2 + z
"""


def test_parse_toy(toy_system):
    ring, polys = parse_system(TOY)
    assert ring.variables == ("x", "y", "z")
    assert ring.field == QQ and ring.order.name == "grevlex"
    assert [str(p) for p in polys] == [str(p) for p in toy_system]


def test_header_options():
    ring, polys = parse_system("vars a b; field GF(7); order lex\n3a^2 b - 1/2 ; a*(b+1)^2")
    assert ring.field == GF(7) and ring.order == LEX
    a, b = ring.gens()
    assert polys[0] == 3 * a**2 * b - ring.constant(Fraction(1, 2))
    assert polys[1] == a * b**2 + 2 * a * b + a
    ring, _ = parse_system("vars x\nx", order="grlex")
    assert ring.order.name == "grlex"


@pytest.mark.parametrize("text,exc,pos", [
    ("vars x, y\nx + q\n", UnknownIdentifierError, (2, 5)),
    ("vars x\nx^-1\n", MalformedExponentError, (2, 3)),
    ("vars x\nx^y\n", MalformedExponentError, (2, 3)),
    ("vars x\nx - x\n", ZeroPolynomialLineError, (2, 1)),
    ("vars x\nfield GF(6)\nx\n", NonPrimeModulusError, (2, 7)),
])
def test_errors_carry_positions(text, exc, pos):
    with pytest.raises(exc) as info:
        parse_system(text)
    assert (info.value.line, info.value.column) == pos
    assert str(info.value).startswith(f"{pos[0]}:{pos[1]}:")


@pytest.mark.parametrize("text", [
    "x + y\n",                     # no vars
    "vars x\n",                    # no polynomials
    "vars x\nx\nvars y\n",         # header after body
    "vars x, x\nx\n",              # duplicate variable
    "vars x\n1.5*x\n",             # inexact coefficient
    "vars x\nx +\n",               # dangling operator
    "vars x\n(x\n",                # unbalanced parenthesis
    "vars x\nfield R\nx\n",        # unknown field
    "vars x\norder diag\nx\n",     # unknown order
    "vars x\n1/0*x\n",             # zero denominator
])
def test_rejected_inputs(text):
    with pytest.raises(ParseError):
        parse_system(text)


def test_parse_polynomial(toy_ring):
    x, y, z = toy_ring.gens()
    assert parse_polynomial("2x y^2 - (z - 1)^2", toy_ring) == 2 * x * y**2 - (z - 1) ** 2
    assert parse_polynomial("-1/2 y", toy_ring) == Fraction(-1, 2) * y


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.booleans())
def test_round_trip(seed, prime):
    s = random_system(seed, field=GF(32003) if prime else QQ)
    text = format_system(s.ring, s.polys)
    ring, polys = parse_system(text)
    assert ring == s.ring
    assert polys == list(s.polys)
    assert format_system(ring, polys) == text
