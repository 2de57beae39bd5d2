"""Signature-based Gröbner basis computation with exact arithmetic.

Typical use::

    from f5gb import parse_system, run, verify_rejected

    ring, polys = parse_system("vars x, y, z\\ny^2 + y*z - x\\ny^2 - z^2 + z")
    result = run(polys, algorithm="f5m")
    for p in result.polynomials():
        print(p)
"""

from .arith import GF, GREVLEX, GRLEX, LEX, QQ, Polynomial, PrimeField, Ring, monomial_order, normal_form
from .corpus import corpus, random_system
from .criteria import is_comparable, is_new_comparable, is_rewritable, pair_passes
from .engine import EngineConfig, RunResult, Stats, f5_reduce, run, verify_rejected
from .errors import F5Error, LoopLimitExceeded, ParseError
from .io import format_system, parse_polynomial, parse_system
from .oracle import buchberger, ideal_member, is_groebner, reduced_gb
from .pairs import CriticalPair, PairQueue, make_pair, spoly
from .signatures import LabeledPolynomial, ModuleOrder, Relation, Signature

__version__ = "0.1.0"

__all__ = [
    "GF", "GREVLEX", "GRLEX", "LEX", "QQ", "Polynomial", "PrimeField", "Ring", "monomial_order", "normal_form",
    "corpus", "random_system",
    "is_comparable", "is_new_comparable", "is_rewritable", "pair_passes",
    "EngineConfig", "RunResult", "Stats", "f5_reduce", "run", "verify_rejected",
    "F5Error", "LoopLimitExceeded", "ParseError",
    "format_system", "parse_polynomial", "parse_system",
    "buchberger", "ideal_member", "is_groebner", "reduced_gb",
    "CriticalPair", "PairQueue", "make_pair", "spoly",
    "LabeledPolynomial", "ModuleOrder", "Relation", "Signature",
]
