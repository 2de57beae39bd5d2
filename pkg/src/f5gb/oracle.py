"""Classical Buchberger algorithm and Gröbner-basis checks (ground truth)."""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .arith import Polynomial, coprime_pp, lcm_pp, normal_form
from .errors import InputError

__all__ = ["s_polynomial", "buchberger", "reduced_gb", "is_groebner", "ideal_member", "leading_ideal"]


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    fld = f.ring.field
    lf, lg = f.lpp(), g.lpp()
    lcm = lcm_pp(lf, lg)
    tf = tuple(a - b for a, b in zip(lcm, lf))
    tg = tuple(a - b for a, b in zip(lcm, lg))
    return f.mul_term(fld.inv(f.lc()), tf).sub_mul_term(fld.inv(g.lc()), tg, g)


def buchberger(polys: Sequence[Polynomial], order=None) -> list:
    """Gröbner basis by the textbook algorithm with the coprime criterion.

    Pairs are processed smallest lcm first.  ``order`` (optional) re-sorts
    the input under another monomial order.
    """
    if not polys:
        raise InputError("buchberger needs at least one polynomial")
    G = [f for f in polys if f.terms]
    if order is not None:
        G = _reorder(G, order)
    if not G:
        return []
    key = G[0].ring.order.key
    heap: list = []

    def add_pairs(n):
        for a in range(n):
            heapq.heappush(heap, (key(lcm_pp(G[a].lpp(), G[n].lpp())), a, n))

    for n in range(1, len(G)):
        add_pairs(n)
    while heap:
        _, i, j = heapq.heappop(heap)
        if coprime_pp(G[i].lpp(), G[j].lpp()):
            continue
        r = normal_form(s_polynomial(G[i], G[j]), G)
        if r.terms:
            G.append(r)
            add_pairs(len(G) - 1)
    return G


def _reorder(polys: Iterable[Polynomial], order) -> list:
    out = []
    for f in polys:
        ring = f.ring.with_order(order)
        out.append(Polynomial(ring, f.terms))
    return out


def reduced_gb(G: Sequence[Polynomial], order=None) -> list:
    """The unique monic inter-reduced basis, sorted by ascending leading term.

    ``G`` should be a Gröbner basis; the result is then the reduced Gröbner
    basis of its ideal.  An element whose lead is divisible by another lead
    is replaced by its normal form modulo the rest (on a Gröbner basis that
    is zero), so other inputs come back autoreduced but not completed.
    """
    G = [f for f in G if f.terms]
    if order is not None:
        G = _reorder(G, order)
    if not G:
        return []
    key = G[0].ring.order.key
    work = sorted(G, key=lambda f: key(f.lpp()))
    minimal: list = []
    while work:
        f = work.pop(0)
        lf = f.lpp()
        if any(all(a <= b for a, b in zip(g.lpp(), lf)) for g in minimal):
            f = normal_form(f, minimal + work)
            if not f.terms:
                continue
            lf = f.lpp()
        # a new lead may make earlier elements redundant
        keep = [g for g in minimal if not all(a <= b for a, b in zip(lf, g.lpp()))]
        work.extend(g for g in minimal if g not in keep)
        work.sort(key=lambda h: key(h.lpp()))
        minimal = keep + [f]
    out = []
    for i, f in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        out.append(normal_form(f, others).monic())
    return sorted(out, key=lambda f: key(f.lpp()))


def is_groebner(G: Sequence[Polynomial]) -> tuple:
    """Buchberger's criterion.  Returns ``(True, None)`` or ``(False, witness)``.

    The witness is the offending pair ``(g_i, g_j)`` whose S-polynomial does
    not reduce to zero, or ``(g, None)`` for a redundant element that does
    not reduce to zero by the rest.

    Only the elements with minimal leading terms take part in pairs: if they
    form a Gröbner basis and every other element reduces to zero by them, the
    whole set is one.  Pairs are taken by ascending lcm degree; ``(i, j)``
    is skipped when a third lead ``lpp(g_k)`` divides ``lcm(i, j)`` with both
    ``lcm(i, k)`` and ``lcm(j, k)`` proper divisors of it (those pairs were
    settled earlier).
    """
    G = [f for f in G if f.terms]
    if not G:
        return True, None
    order_key = G[0].ring.order.key
    G = sorted(G, key=lambda f: order_key(f.lpp()))
    core: list = []
    rest: list = []
    for f in G:
        lf = f.lpp()
        if any(all(a <= b for a, b in zip(g.lpp(), lf)) for g in core):
            rest.append(f)
        else:
            core.append(f)
    leads = [g.lpp() for g in core]
    pairs = sorted(
        ((sum(lcm_pp(leads[i], leads[j])), i, j) for j in range(len(core)) for i in range(j)),
    )
    for _, i, j in pairs:
        li, lj = leads[i], leads[j]
        if coprime_pp(li, lj):
            continue
        lij = lcm_pp(li, lj)
        if _chain_skip(leads, i, j, lij):
            continue
        if normal_form(s_polynomial(core[i], core[j]), core).terms:
            return False, (core[i], core[j])
    for f in rest:
        if normal_form(f, core).terms:
            return False, (f, None)
    return True, None


def _chain_skip(leads, i, j, lij) -> bool:
    for k, lk in enumerate(leads):
        if k == i or k == j or not all(a <= b for a, b in zip(lk, lij)):
            continue
        lik = lcm_pp(leads[i], lk)
        ljk = lcm_pp(leads[j], lk)
        if lik != lij and ljk != lij:
            return True
    return False


def ideal_member(f: Polynomial, G: Sequence[Polynomial]) -> bool:
    """Membership test; ``G`` must be a Gröbner basis."""
    return not normal_form(f, G).terms


def leading_ideal(G: Sequence[Polynomial]) -> list:
    """Minimal generators of the leading-term ideal, sorted."""
    leads = sorted({f.lpp() for f in G if f.terms}, key=lambda t: (sum(t), t))
    out: list = []
    for t in leads:
        if not any(all(a <= b for a, b in zip(s, t)) for s in out):
            out.append(t)
    return sorted(out)
