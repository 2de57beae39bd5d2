"""Seeded random polynomial systems for cross-checking the engines."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .arith import GF, GREVLEX, QQ, Polynomial, Ring, monomial_order

__all__ = ["RandomSystem", "random_system", "corpus"]

VARIABLE_NAMES = ("x", "y", "z", "w")


@dataclass(frozen=True)
class RandomSystem:
    seed: int
    ring: Ring
    polys: tuple

    def __str__(self) -> str:
        return f"seed={self.seed} {self.ring}: " + "; ".join(str(p) for p in self.polys)


def _monomials(nvars: int, max_degree: int) -> list:
    return [e for e in itertools.product(range(max_degree + 1), repeat=nvars) if sum(e) <= max_degree]


def random_system(
    seed: int,
    *,
    field=QQ,
    nvars: tuple = (2, 4),
    ngens: tuple = (2, 4),
    max_degree: int = 3,
    density: tuple = (0.2, 0.6),
    coeff_bound: int = 5,
    order=GREVLEX,
) -> RandomSystem:
    """One random system; size ranges are inclusive ``(low, high)`` pairs.

    Each generator has total degree in ``[1, max_degree]`` and includes every
    monomial of degree up to its own with probability ``density`` (drawn per
    system); its top-degree part is never empty.  Rational coefficients are
    non-zero integers in ``[-coeff_bound, coeff_bound]``; prime-field
    coefficients are uniform non-zero residues.
    """
    rng = random.Random(seed)
    n = rng.randint(*nvars)
    m = rng.randint(*ngens)
    dens = rng.uniform(*density)
    ring = Ring(VARIABLE_NAMES[:n], field, monomial_order(order))
    mons = _monomials(n, max_degree)

    def coeff():
        if field.characteristic == 0:
            return rng.choice([c for c in range(-coeff_bound, coeff_bound + 1) if c])
        return rng.randrange(1, field.p)

    polys = []
    for _ in range(m):
        d = rng.randint(1, max_degree)
        terms = {e: coeff() for e in mons if sum(e) <= d and rng.random() < dens}
        top = [e for e in mons if sum(e) == d]
        if not any(sum(e) == d for e in terms):
            terms[rng.choice(top)] = coeff()
        polys.append(Polynomial(ring, terms))
    return RandomSystem(seed, ring, tuple(polys))


def corpus(size: int = 200, *, seed: int = 0, prime: int = 32003, **kwargs) -> list:
    """``size`` systems, alternating GF(prime) and Q, from consecutive seeds."""
    out = []
    for k in range(size):
        fld = GF(prime) if k % 2 == 0 else QQ
        out.append(random_system(seed + k, field=fld, **kwargs))
    return out
